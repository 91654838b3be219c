#include "coverdepth/errors.hpp"
#include "coverdepth/verification.hpp"

#include <cstdio>
#include <iostream>
#include <string>

using namespace coverdepth;

int main(int argc, char** argv)
{
    VerifyLevel level = VerifyLevel::Full;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--level" && i + 1 < argc)
        {
            try
            {
                level = parse_verify_level(argv[++i]);
            }
            catch (const InputError& e)
            {
                std::cerr << e.what() << '\n';
                return 2;
            }
        }
        else
        {
            std::cerr << "usage: acceptance [--level quick|full]\n";
            return 2;
        }
    }

    int failures = 0;
    run_all_criteria(level, {}, [&](const CriterionResult& r) {
        std::printf("%s criterion %2d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        for (const auto& d : r.details)
            std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        failures += r.passed ? 0 : 1;
    });
    std::printf("%d of %d criteria passed\n", kCriterionCount - failures, kCriterionCount);
    return failures == 0 ? 0 : 1;
}
