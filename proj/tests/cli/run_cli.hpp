#pragma once

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <sys/wait.h>

extern std::string g_cli_path;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? "" : "env " + env + " ") + g_cli_path + " " + args +
      " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult result;
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("niven-cli-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
