#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cliharness {

namespace fs = std::filesystem;

struct CmdResult {
  int exit_code;
  std::string output;  // captured stdout
};

inline std::string read_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

inline void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
}

/// Runs the CLI built by this tree with the given argument string, capturing
/// stdout into scratch/stdout.txt.
inline CmdResult run_cli(const std::string& args, const fs::path& scratch) {
  fs::create_directories(scratch);
  const fs::path out = scratch / "stdout.txt";
  const std::string cmd =
      std::string("\"") + BLOWUP_CLI_PATH + "\" " + args + " > \"" + out.string() +
      "\" 2> \"" + (scratch / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  CmdResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.output = read_file(out);
  return res;
}

inline fs::path fresh_scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace cliharness
