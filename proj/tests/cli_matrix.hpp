#pragma once

// Shared CLI invocations: exercised by test_cli and replayed by the
// acceptance determinism check.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace clitest {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

inline Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = hbasis::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Input files the matrix refers to, written into the working directory.
inline void write_fixtures() {
  write_file("cli_basis_0134.txt", "[basis]\nh = 2\nelements = 0 1 3 4\n");
  write_file("cli_residues_z8.txt", "elements = 0 1 2 3\n");
}

inline std::vector<std::vector<std::string>> matrix() {
  return {
      {"verify", "--h", "2", "--n", "8", "--set", "cli_basis_0134.txt"},
      {"verify", "--h", "2", "--n", "9", "--set", "cli_basis_0134.txt"},
      {"sidon", "--p", "5", "--k", "2"},
      {"sidon", "--p", "7", "--k", "3"},
      {"sidon", "--phi", "12", "--k", "2"},
      {"complement", "--q", "8", "--k", "1", "--set", "cli_residues_z8.txt"},
      {"complement", "--q", "8", "--k", "2", "--set", "cli_residues_z8.txt"},
      {"bounds", "--h", "2", "--k", "4"},
      {"bounds", "--h", "3", "--n", "1000", "--format", "csv"},
      {"search", "--h", "2", "--k", "5", "--oracle"},
      {"search", "--h", "3", "--n", "20"},
      {"table", "--h-max", "3", "--k-max", "4"},
      {"table", "--h-max", "2", "--k-max", "3", "--kind", "bounds"},
      {"construct", "--n", "100000", "--h", "4"},
      {"construct", "--n", "10000", "--h", "3", "--k", "1", "--a", "2"},
  };
}

}  // namespace clitest
