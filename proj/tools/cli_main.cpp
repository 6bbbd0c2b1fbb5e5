#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppmisum/engine.hpp"
#include "ppmisum/errors.hpp"
#include "ppmisum/eval.hpp"
#include "ppmisum/io.hpp"

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> inputs;
  double percent = 20.0;
  std::vector<double> sweep = {10.0, 15.0, 20.0, 25.0, 30.0};
  std::string stopwords;
  std::string mode = "summarize";
  std::string format = "text";
  double ppmi_floor = 0.0;
  bool dump_matrices = false;
  std::string output;
};

struct SummarizeResult {
  std::string name;
  ppmisum::Summary summary;
  std::vector<ppmisum::SentenceScore> scores;
};

struct StatsResult {
  std::string name;
  ppmisum::PipelineStats stats;
};

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string percent_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

std::string pad_right(const std::string& s, std::size_t width) {
  std::string out = s;
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  std::string out;
  if (s.size() < width) out.append(width - s.size(), ' ');
  out += s;
  return out;
}

// --- summarize -------------------------------------------------------------

std::string format_summarize_text(const std::vector<SummarizeResult>& docs) {
  std::ostringstream out;
  const bool multi = docs.size() > 1;
  bool first = true;
  for (const auto& d : docs) {
    if (!first) out << '\n';
    first = false;
    if (multi) out << "# " << d.name << '\n';
    out << d.summary.text << '\n';
  }
  return out.str();
}

std::string format_summarize_csv(const std::vector<SummarizeResult>& docs) {
  std::ostringstream out;
  out << "document,index,weight,selected\n";
  for (const auto& d : docs) {
    std::vector<char> picked(d.scores.size(), 0);
    for (const std::size_t idx : d.summary.selected) picked[idx] = 1;
    for (const auto& score : d.scores) {
      out << d.name << ',' << score.index << ',' << fixed(score.weight, 12)
          << ',' << int(picked[score.index]) << '\n';
    }
  }
  return out.str();
}

std::string format_summarize_json(const std::vector<SummarizeResult>& docs,
                                  double percent) {
  ordered_json root;
  root["mode"] = "summarize";
  root["percent"] = percent;
  root["documents"] = ordered_json::array();
  for (const auto& d : docs) {
    ordered_json doc;
    doc["document"] = d.name;
    doc["count"] = d.summary.count;
    doc["selected"] = d.summary.selected;
    doc["summary"] = d.summary.text;
    root["documents"].push_back(std::move(doc));
  }
  return root.dump(2) + "\n";
}

// --- evaluate --------------------------------------------------------------

std::string format_evaluate_text(
    const std::vector<ppmisum::EvaluationReport>& reports,
    const std::vector<double>& sweep) {
  std::size_t name_w = std::string("document").size();
  for (const auto& r : reports)
    name_w = std::max(name_w, r.document_name.size());
  const std::size_t col_w = 10;

  std::ostringstream out;
  out << pad_right("document", name_w);
  for (const double p : sweep)
    out << pad_left(percent_label(p) + "%", col_w);
  out << pad_left("avg", col_w) << '\n';

  std::vector<double> column_sums(sweep.size(), 0.0);
  double average_sum = 0.0;
  for (const auto& r : reports) {
    out << pad_right(r.document_name, name_w);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      out << pad_left(fixed(r.rows[i].cosine, 5), col_w);
      column_sums[i] += r.rows[i].cosine;
    }
    out << pad_left(fixed(r.average, 5), col_w) << '\n';
    average_sum += r.average;
  }
  if (!reports.empty()) {
    const double n = static_cast<double>(reports.size());
    out << pad_right("AVG", name_w);
    for (const double sum : column_sums)
      out << pad_left(fixed(sum / n, 5), col_w);
    out << pad_left(fixed(average_sum / n, 5), col_w) << '\n';
  }
  return out.str();
}

std::string format_evaluate_csv(
    const std::vector<ppmisum::EvaluationReport>& reports,
    const std::vector<double>& sweep) {
  std::ostringstream out;
  out << "document";
  for (const double p : sweep) out << ',' << percent_label(p);
  out << ",average\n";

  std::vector<double> column_sums(sweep.size(), 0.0);
  double average_sum = 0.0;
  for (const auto& r : reports) {
    out << r.document_name;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      out << ',' << fixed(r.rows[i].cosine, 12);
      column_sums[i] += r.rows[i].cosine;
    }
    out << ',' << fixed(r.average, 12) << '\n';
    average_sum += r.average;
  }
  if (!reports.empty()) {
    const double n = static_cast<double>(reports.size());
    out << "AVG";
    for (const double sum : column_sums) out << ',' << fixed(sum / n, 12);
    out << ',' << fixed(average_sum / n, 12) << '\n';
  }
  return out.str();
}

std::string format_evaluate_json(
    const std::vector<ppmisum::EvaluationReport>& reports) {
  ordered_json root;
  root["mode"] = "evaluate";
  double overall = 0.0;
  for (const auto& r : reports) overall += r.average;
  if (!reports.empty()) overall /= static_cast<double>(reports.size());
  root["overall"] = overall;
  root["documents"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json doc;
    doc["document"] = r.document_name;
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.rows) {
      ordered_json cell;
      cell["percent"] = row.percent;
      cell["cosine"] = row.cosine;
      doc["rows"].push_back(std::move(cell));
    }
    doc["average"] = r.average;
    root["documents"].push_back(std::move(doc));
  }
  return root.dump(2) + "\n";
}

// --- stats -----------------------------------------------------------------

std::string format_stats_text(const std::vector<StatsResult>& docs) {
  std::size_t name_w = std::string("document").size();
  for (const auto& d : docs) name_w = std::max(name_w, d.name.size());
  const std::size_t col_w = 11;

  std::ostringstream out;
  out << pad_right("document", name_w) << pad_left("sentences", col_w)
      << pad_left("words", col_w) << pad_left("stems", col_w)
      << pad_left("eliminated", col_w) << '\n';
  for (const auto& d : docs) {
    out << pad_right(d.name, name_w)
        << pad_left(std::to_string(d.stats.sentence_count), col_w)
        << pad_left(std::to_string(d.stats.total_words), col_w)
        << pad_left(std::to_string(d.stats.unique_stems), col_w)
        << pad_left(std::to_string(d.stats.percent_eliminated) + "%", col_w)
        << '\n';
  }
  return out.str();
}

std::string format_stats_csv(const std::vector<StatsResult>& docs) {
  std::ostringstream out;
  out << "document,sentences,total_words,unique_stems,percent_eliminated\n";
  for (const auto& d : docs) {
    out << d.name << ',' << d.stats.sentence_count << ','
        << d.stats.total_words << ',' << d.stats.unique_stems << ','
        << d.stats.percent_eliminated << '\n';
  }
  return out.str();
}

std::string format_stats_json(const std::vector<StatsResult>& docs) {
  ordered_json root;
  root["mode"] = "stats";
  root["documents"] = ordered_json::array();
  for (const auto& d : docs) {
    ordered_json doc;
    doc["document"] = d.name;
    doc["sentences"] = d.stats.sentence_count;
    doc["total_words"] = d.stats.total_words;
    doc["unique_stems"] = d.stats.unique_stems;
    doc["percent_eliminated"] = d.stats.percent_eliminated;
    root["documents"].push_back(std::move(doc));
  }
  return root.dump(2) + "\n";
}

// --- plumbing ---------------------------------------------------------------

std::string sanitize_base_name(const std::string& name) {
  std::string base = fs::path(name).stem().string();
  std::string out;
  for (const char c : base) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '.' || c == '_' ||
                      c == '-';
    if (keep) out += c;
  }
  return out.empty() ? "document" : out;
}

void dump_model_matrices(const ppmisum::DocumentModel& model,
                         const Options& opt) {
  fs::path dir = ".";
  if (!opt.output.empty()) {
    const fs::path parent = fs::path(opt.output).parent_path();
    if (!parent.empty()) dir = parent;
  }
  const std::string base = sanitize_base_name(model.name());

  const fs::path counts_path = dir / (base + ".counts.txt");
  std::ofstream counts(counts_path, std::ios::binary);
  if (!counts) throw ppmisum::IoError("cannot write " + counts_path.string());
  ppmisum::dump_triplets(model.tsm.counts, counts);

  const fs::path weights_path = dir / (base + ".ppmi.txt");
  std::ofstream weights(weights_path, std::ios::binary);
  if (!weights)
    throw ppmisum::IoError("cannot write " + weights_path.string());
  ppmisum::dump_triplets(model.ppmi.weights, weights);
}

int emit(const std::string& text, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << opt.output << '\n';
    return 1;
  }
  out << text;
  return 0;
}

int run(const Options& opt) {
  std::vector<std::string> paths;
  try {
    paths = ppmisum::expand_inputs(opt.inputs);
  } catch (const ppmisum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  const ppmisum::StopWordList* stoplist = &ppmisum::StopWordList::default_list();
  ppmisum::StopWordList custom;
  if (!opt.stopwords.empty()) {
    try {
      custom = ppmisum::load_stopwords(opt.stopwords);
    } catch (const ppmisum::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
    stoplist = &custom;
  }

  std::vector<SummarizeResult> summaries;
  std::vector<ppmisum::EvaluationReport> reports;
  std::vector<StatsResult> stats;
  int failures = 0;

  for (const std::string& path : paths) {
    try {
      const ppmisum::RawDocument raw = ppmisum::read_document(path);
      if (opt.mode == "stats") {
        const auto pre = ppmisum::preprocess_document(raw, *stoplist);
        stats.push_back({pre.name, pre.stats});
        continue;
      }
      const ppmisum::DocumentModel model =
          ppmisum::analyze_document(raw, *stoplist, opt.ppmi_floor);
      if (opt.dump_matrices) dump_model_matrices(model, opt);
      if (opt.mode == "summarize") {
        SummarizeResult r;
        r.name = model.name();
        r.summary = ppmisum::summarize(model, opt.percent);
        r.scores = model.scores;
        summaries.push_back(std::move(r));
      } else {
        reports.push_back(ppmisum::evaluate_sweep(model, opt.sweep));
      }
    } catch (const ppmisum::Error& e) {
      std::cerr << "error: " << path << ": " << e.what() << '\n';
      ++failures;
    }
  }

  std::string text;
  if (opt.mode == "summarize") {
    if (opt.format == "text") text = format_summarize_text(summaries);
    if (opt.format == "csv") text = format_summarize_csv(summaries);
    if (opt.format == "json") text = format_summarize_json(summaries, opt.percent);
  } else if (opt.mode == "evaluate") {
    if (opt.format == "text") text = format_evaluate_text(reports, opt.sweep);
    if (opt.format == "csv") text = format_evaluate_csv(reports, opt.sweep);
    if (opt.format == "json") text = format_evaluate_json(reports);
  } else {
    if (opt.format == "text") text = format_stats_text(stats);
    if (opt.format == "csv") text = format_stats_csv(stats);
    if (opt.format == "json") text = format_stats_json(stats);
  }

  const int emit_status = emit(text, opt);
  if (emit_status != 0) return emit_status;
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "Extractive summarizer: scores sentences by PPMI-weighted term "
      "association and checks summaries against the document's main topic"};
  app.add_option("inputs", opt.inputs,
                 "input files, directories of .txt files, or - for stdin")
      ->required();
  app.add_option("--percent", opt.percent,
                 "summary size as a percentage of sentence count, in (0,100]")
      ->capture_default_str();
  app.add_option("--sweep", opt.sweep,
                 "comma-separated percents for evaluate mode")
      ->delimiter(',');
  app.add_option("--stopwords", opt.stopwords,
                 "stop-word file replacing the built-in list");
  app.add_option("--mode", opt.mode, "summarize | evaluate | stats")
      ->check(CLI::IsMember({"summarize", "evaluate", "stats"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--ppmi-floor", opt.ppmi_floor,
                 "zero out PMI values at or below this floor")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--dump-matrices", opt.dump_matrices,
               "write sparse triplet dumps of the count and weight matrices");
  app.add_option("--output", opt.output,
                 "write the report to this file instead of stdout");
  CLI11_PARSE(app, argc, argv);

  const auto invalid = [](double p) { return !(p > 0.0 && p <= 100.0); };
  if (invalid(opt.percent) || opt.sweep.empty() ||
      std::any_of(opt.sweep.begin(), opt.sweep.end(), invalid)) {
    std::cerr << "error: percent values must lie in (0, 100]\n";
    return 2;
  }
  return run(opt);
}
