#ifndef PPMISUM_PORTER_HPP
#define PPMISUM_PORTER_HPP

#include <string>
#include <string_view>

namespace ppmisum {

// Number of vowel-consonant transitions m in the decomposition
// [C](VC)^m[V], with 'y' counting as a vowel when it follows a consonant.
// Throws InvalidWord if the input is empty or contains non-letters.
int porter_measure(std::string_view word);

// Suffix-stripping stem of a lowercase word, following the reference
// implementation of the Porter algorithm (words of length <= 2 are left
// untouched). Throws InvalidWord if the input is empty or contains
// non-letters.
std::string porter_stem(std::string_view word);

}  // namespace ppmisum

#endif  // PPMISUM_PORTER_HPP
