#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qxopt/error.hpp"

namespace qxopt {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return ss.str();
}

}  // namespace qxopt
