#include "ppmisum/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ppmisum/errors.hpp"

namespace ppmisum {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

RawDocument read_document(const std::string& path_or_dash) {
  if (path_or_dash == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return {"<stdin>", std::move(text)};
  }
  std::ifstream in(path_or_dash, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path_or_dash);
  }
  std::string text(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) {
    throw IoError("error while reading " + path_or_dash);
  }
  return {std::filesystem::path(path_or_dash).filename().string(),
          std::move(text)};
}

StopWordList load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open stop-word list " + path.string());
  }
  StopWordList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    const auto hash = v.find('#');
    if (hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    std::string word;
    for (char c : v) {
      word += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    list.insert(std::move(word));
  }
  return list;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  namespace fs = std::filesystem;
  std::vector<std::string> expanded;
  for (const std::string& input : inputs) {
    if (input == "-") {
      expanded.push_back(input);
      continue;
    }
    fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          files.push_back(entry.path().string());
        }
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) {
        throw IoError("directory holds no .txt files: " + input);
      }
      expanded.insert(expanded.end(), files.begin(), files.end());
    } else if (fs::exists(p, ec)) {
      expanded.push_back(input);
    } else {
      throw IoError("no such file or directory: " + input);
    }
  }
  return expanded;
}

void dump_triplets(const CountMatrix& m, std::ostream& out) {
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) ++nnz;
    }
  }
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        out << (i + 1) << ' ' << (j + 1) << ' ' << m(i, j) << '\n';
      }
    }
  }
}

void dump_triplets(const RealMatrix& m, std::ostream& out) {
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) ++nnz;
    }
  }
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) {
        std::snprintf(buf, sizeof(buf), "%.12g", m(i, j));
        out << (i + 1) << ' ' << (j + 1) << ' ' << buf << '\n';
      }
    }
  }
}

}  // namespace ppmisum
