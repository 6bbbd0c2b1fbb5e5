#ifndef PPMISUM_IO_HPP
#define PPMISUM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppmisum/matrix.hpp"
#include "ppmisum/text.hpp"

namespace ppmisum {

// Reads a whole file as UTF-8 text; "-" reads standard input. Throws
// IoError on failure.
RawDocument read_document(const std::string& path_or_dash);

// Stop-word file: one word per line, '#' starts a comment, blank lines
// ignored. Throws IoError when unreadable.
StopWordList load_stopwords(const std::filesystem::path& path);

// Expands the CLI inputs: a directory becomes its *.txt files sorted by
// name; plain paths and "-" pass through. Throws IoError for a missing
// path or an empty directory.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs);

// Sparse triplet dump, matrix-market style: a size header line followed
// by 1-based "row col value" lines for every nonzero.
void dump_triplets(const CountMatrix& m, std::ostream& out);
void dump_triplets(const RealMatrix& m, std::ostream& out);

}  // namespace ppmisum

#endif  // PPMISUM_IO_HPP
