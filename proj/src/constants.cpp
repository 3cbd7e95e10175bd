#include "zpr/constants.hpp"

namespace zpr {

Constants Constants::si()
{
    return {1.054571817e-34, 299792458.0, 1.380649e-23, 5.670374419e-8};
}

Constants Constants::natural()
{
    return {1.0, 1.0, 1.0, pi * pi / 60.0};
}

Constants constants_for(UnitSystem u)
{
    return u == UnitSystem::si ? Constants::si() : Constants::natural();
}

}  // namespace zpr
