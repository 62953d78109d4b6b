#define DOCTEST_CONFIG_IMPLEMENT
#include <string>
#include <vector>

#include "doctest.h"

/* Extra positional arguments (the path to the tool binary for the CLI tests)
   are stashed here before doctest sees the command line. */
std::vector<std::string> g_test_args;

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_test_args.emplace_back(argv[i]);
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
