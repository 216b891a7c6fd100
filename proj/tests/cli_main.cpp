#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

// Path of the CLI binary under test, taken from the first bare argument so
// the test target can be registered as `orthorep_cli_tests <path-to-cli>`.
std::string g_cli_path;

int main(int argc, char** argv) {
    std::vector<char*> forwarded{argv[0]};
    for (int i = 1; i < argc; ++i) {
        if (g_cli_path.empty() && argv[i][0] != '-') {
            g_cli_path = argv[i];
            continue;
        }
        forwarded.push_back(argv[i]);
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: %s <cli-binary> [doctest options]\n", argv[0]);
        return 1;
    }

    doctest::Context context;
    context.applyCommandLine(static_cast<int>(forwarded.size()), forwarded.data());
    return context.run();
}
