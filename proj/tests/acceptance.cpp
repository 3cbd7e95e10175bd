#include <cstdio>
#include <cstdlib>
#include <string>

#include "zpr/validation.hpp"

// Usage: zpr_acceptance [criterion-id ...]; no ids runs all criteria.
int main(int argc, char** argv)
{
    zpr::ValidationOptions opt;
    bool ok = true;
    auto run = [&](int id) {
        zpr::CheckResult r = zpr::run_criterion(id, opt);
        std::printf("%s\n", r.summary_line().c_str());
        for (const zpr::Measurement& m : r.items)
            std::printf("    %s %s = %.6e (tol %.1e)\n", m.pass ? "ok  " : "FAIL", m.name.c_str(), m.measured,
                        m.tolerance);
        std::fflush(stdout);
        ok = ok && r.pass();
    };
    if (argc == 1) {
        for (int id = 1; id <= zpr::criterion_count; ++id)
            run(id);
    } else {
        for (int i = 1; i < argc; ++i)
            run(std::atoi(argv[i]));
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
