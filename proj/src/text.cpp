#include "ppmisum/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include "ppmisum/errors.hpp"
#include "ppmisum/porter.hpp"

namespace ppmisum {

namespace {

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

bool has_word_characters(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_ascii_alnum);
}

// Closing quotes/brackets that may trail the terminal punctuation of a
// line without making it a title.
bool is_closing(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

bool line_has_terminal_punctuation(std::string_view line) {
  std::size_t end = line.size();
  while (end > 0 && is_closing(line[end - 1])) --end;
  return end > 0 && is_terminal(line[end - 1]);
}

// Abbreviations whose trailing period is not a sentence break.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> kAbbrev = {
      "mr", "mrs", "dr", "prof", "u.s", "e.g", "i.e"};
  return kAbbrev;
}

// The word immediately before position `pos`, lowercased and with leading
// punctuation stripped.
std::string word_before(std::string_view text, std::size_t pos) {
  std::size_t start = pos;
  while (start > 0 && !std::isspace(static_cast<unsigned char>(text[start - 1]))) {
    --start;
  }
  std::string word;
  for (std::size_t i = start; i < pos; ++i) word += ascii_lower(text[i]);
  std::size_t lead = 0;
  while (lead < word.size() && !is_ascii_alnum(word[lead])) ++lead;
  return word.substr(lead);
}

void flush_sentence(std::string_view piece, std::vector<std::string>& out) {
  std::string_view t = trim(piece);
  if (!has_word_characters(t)) return;
  out.emplace_back(t);
}

// Breaks one paragraph (internal newlines already collapsed to spaces)
// into sentences.
void split_paragraph(std::string_view para, std::vector<std::string>& out) {
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t len = para.size();
  while (i < len) {
    if (!is_terminal(para[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < len && is_terminal(para[run_end])) ++run_end;
    const bool at_end = run_end == len;
    const bool before_space =
        !at_end && std::isspace(static_cast<unsigned char>(para[run_end]));
    if (!at_end && !before_space) {
      i = run_end;  // decimal points, U.S.-style inner periods, etc.
      continue;
    }
    if (run_end - i == 1 && para[i] == '.' &&
        abbreviations().contains(word_before(para, i))) {
      i = run_end;
      continue;
    }
    flush_sentence(para.substr(start, run_end - start), out);
    start = run_end;
    i = run_end;
  }
  flush_sentence(para.substr(start), out);
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  if (!has_word_characters(text)) {
    throw EmptyDocument("document contains no word characters");
  }

  std::string normalized;
  normalized.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      normalized += '\n';
    } else {
      normalized += text[i];
    }
  }

  std::vector<std::string_view> lines;
  {
    std::string_view rest = normalized;
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      if (nl == std::string_view::npos) {
        lines.push_back(rest);
        break;
      }
      lines.push_back(rest.substr(0, nl));
      rest = rest.substr(nl + 1);
    }
  }

  std::vector<std::string> sentences;
  std::size_t line_idx = 0;
  while (line_idx < lines.size() && is_blank(lines[line_idx])) ++line_idx;

  // A first line without terminal punctuation is a title sentence.
  if (line_idx < lines.size() &&
      !line_has_terminal_punctuation(trim(lines[line_idx]))) {
    flush_sentence(lines[line_idx], sentences);
    ++line_idx;
  }

  // Remaining lines form blank-line-separated paragraphs.
  std::string para;
  auto flush_para = [&] {
    if (!para.empty()) {
      split_paragraph(para, sentences);
      para.clear();
    }
  };
  for (; line_idx < lines.size(); ++line_idx) {
    if (is_blank(lines[line_idx])) {
      flush_para();
      continue;
    }
    std::string_view t = trim(lines[line_idx]);
    if (!para.empty()) para += ' ';
    para.append(t);
  }
  flush_para();
  return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : sentence) {
    if (is_ascii_alnum(c)) {
      current += ascii_lower(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopWordList& stoplist) {
  std::erase_if(tokens,
                [&](const std::string& t) { return stoplist.contains(t); });
  return tokens;
}

int percent_eliminated(std::size_t total_words, std::size_t unique_stems) {
  if (total_words == 0) return 0;
  const double ratio =
      static_cast<double>(unique_stems) / static_cast<double>(total_words);
  return static_cast<int>(std::lround(100.0 * (1.0 - ratio)));
}

PreprocessedDocument preprocess_document(const RawDocument& doc,
                                         const StopWordList& stoplist) {
  PreprocessedDocument result;
  result.name = doc.name;

  const std::vector<std::string> raw_sentences = split_sentences(doc.text);
  std::unordered_set<std::string> distinct;
  std::size_t total_words = 0;

  result.sentences.reserve(raw_sentences.size());
  for (std::size_t i = 0; i < raw_sentences.size(); ++i) {
    SentenceRecord rec;
    rec.index = i;
    rec.original_text = raw_sentences[i];
    rec.tokens = tokenize(rec.original_text);
    total_words += rec.tokens.size();

    std::vector<std::string> kept = remove_stopwords(rec.tokens, stoplist);
    rec.stems.reserve(kept.size());
    for (std::string& tok : kept) {
      const bool has_digit = std::any_of(tok.begin(), tok.end(), is_ascii_digit);
      rec.stems.push_back(has_digit ? std::move(tok) : porter_stem(tok));
    }
    for (const std::string& s : rec.stems) distinct.insert(s);
    result.sentences.push_back(std::move(rec));
  }

  result.stats.sentence_count = result.sentences.size();
  result.stats.total_words = total_words;
  result.stats.unique_stems = distinct.size();
  result.stats.percent_eliminated =
      percent_eliminated(total_words, distinct.size());
  return result;
}

}  // namespace ppmisum
