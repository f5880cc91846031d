#pragma once

// Shared driver for CLI golden tests: a fixed table of commands, helpers to
// run the binary through the shell, and byte-level file comparison. The
// golden files are regenerated by the golden_writer tool from this same
// table, so the table and the files cannot drift apart.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli_util {

struct CliCase {
  const char* golden;      // file name under the golden directory
  const char* args;        // arguments after the binary name
  int expected_exit;       // 0 success, 1 validation error, 2 guard violation
};

// {GOLDEN} expands to the golden directory, {THREADS} to the worker count.
inline const std::vector<CliCase>& cases() {
  static const std::vector<CliCase> table = {
      {"symmetric_order3.json", "symmetric --chi '1+y' --order 3", 0},
      {"symmetric_alternating.json",
       "symmetric --chi '1+y' --order 6 --variant alternating", 0},
      {"quotient_a3.json", "quotient --n 3 --subgroup '(1 2 3)' --chi '1+y'", 0},
      {"quotient_a3.json", "run {GOLDEN}/request_quotient.json", 0},
      {"orbifold_e2.json", "orbifold --order 5 --euler 2", 0},
      {"series_todd_push.json",
       "series --class "
       "'{\"kind\":\"todd\",\"components\":{\"0\":\"1\",\"1\":\"1/2\"},\"label\":\"c\"}' "
       "--order 3 --push",
       0},
      {"twist_irr21.json", "twist --n 3 --rep irreducible --mu '[2,1]' --chi '1+y'", 0},
      {"twist_class_sign.json",
       "twist --n 2 --rep sign --class "
       "'{\"kind\":\"hirzebruch_minus_y\",\"components\":{\"0\":\"1+y\"},\"label\":\"c\"}'",
       0},
      {"schur_21_check.json",
       "schur --mu '[2,1]' --class "
       "'{\"kind\":\"chern\",\"components\":{\"0\":\"1\",\"1\":\"1\"},\"label\":\"c\"}' "
       "--check",
       0},
      {"ohmoto_z2_e2.json", "ohmoto --family z2 --euler 2 --order 5", 0},
      {"verify_quick.json",
       "verify --suite macdonald --suite diagram --max-n 4 --trials 3 --seed 7 "
       "--threads {THREADS}",
       0},
      {"error_badchi.json", "symmetric --chi '1+q' --order 3", 1},
      {"error_guard.json", "quotient --n 9 --subgroup '(1 2)' --chi '1+y'", 2},
  };
  return table;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

inline std::string require_env(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value)
    throw std::runtime_error(std::string("environment variable ") + name + " is not set");
  return value;
}

inline std::string replace_all(std::string text, const std::string& from,
                               const std::string& to) {
  for (std::size_t at = text.find(from); at != std::string::npos;
       at = text.find(from, at + to.size()))
    text.replace(at, from.size(), to);
  return text;
}

inline std::string expand_args(const CliCase& c, const std::string& golden_dir, int threads) {
  std::string args = replace_all(c.args, "{GOLDEN}", golden_dir);
  return replace_all(args, "{THREADS}", std::to_string(threads));
}

// Runs `SYMPROD_THREADS=<threads> <bin> <args>` and captures stdout bytes.
inline RunResult run_command(const std::string& bin, const std::string& args, int threads) {
  std::string command =
      "SYMPROD_THREADS=" + std::to_string(threads) + " " + bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cli_util
