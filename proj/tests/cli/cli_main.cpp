#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "run_cli.hpp"

std::string g_cli_path;

int main(int argc, char** argv) {
  std::vector<char*> args;
  args.push_back(argv[0]);
  for (int i = 1; i < argc; ++i) {
    if (g_cli_path.empty() && argv[i][0] != '-') {
      g_cli_path = argv[i];
      continue;
    }
    args.push_back(argv[i]);
  }
  if (g_cli_path.empty()) {
    if (const char* env = std::getenv("NIVEN_CLI")) g_cli_path = env;
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "usage: %s <path-to-niven-binary> [doctest args]\n", argv[0]);
    return 1;
  }
  doctest::Context context(static_cast<int>(args.size()), args.data());
  return context.run();
}
