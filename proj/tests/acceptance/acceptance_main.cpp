// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check states its tolerance inline.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ppmisum/engine.hpp"
#include "ppmisum/errors.hpp"
#include "ppmisum/eval.hpp"
#include "ppmisum/io.hpp"
#include "ppmisum/kernels.hpp"
#include "ppmisum/porter.hpp"
#include "ppmisum/ppmi.hpp"
#include "ppmisum/ranker.hpp"
#include "ppmisum/text.hpp"
#include "reference.hpp"

namespace fs = std::filesystem;
namespace ref = ppmisum::reference;

namespace {

const fs::path kTestdata = PPMISUM_TESTDATA_DIR;
const std::string kCli = PPMISUM_CLI_PATH;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("[%s] %d. %s\n", pass ? "PASS" : "FAIL", criterion,
              text.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(kTestdata / "corpus")) {
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<ppmisum::DocumentModel> analyzed_corpus() {
  std::vector<ppmisum::DocumentModel> models;
  for (const auto& file : corpus_files()) {
    models.push_back(
        ppmisum::analyze_document(ppmisum::read_document(file.string()),
                                  ppmisum::StopWordList::default_list()));
  }
  return models;
}

// --- criterion 1: PPMI equals an independent brute-force implementation ---

void criterion_1() {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> rows_dist(1, 6);
  std::uniform_int_distribution<int> cols_dist(1, 5);
  std::uniform_int_distribution<int> entry(0, 4);

  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    ppmisum::CountMatrix f(rows_dist(rng), cols_dist(rng));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        f(i, j) = entry(rng);
        total += f(i, j);
      }
    }
    if (total == 0) continue;
    ++done;

    ppmisum::TermSentenceMatrix tsm;
    tsm.counts = f;
    const auto got = ppmisum::compute_ppmi(tsm);
    const auto want = ref::brute_force_ppmi(f);
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        worst = std::max(worst, std::abs(got.weights(i, j) - want(i, j)));
      }
    }
  }
  const double elapsed = seconds_since(start);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "PPMI matches the brute-force oracle on 200 random matrices "
                "(max |diff| %.2e <= 1e-12, %.3f s < 1 s)",
                worst, elapsed);
  report(1, worst <= 1e-12 && elapsed < 1.0, buf);
}

// --- criterion 2: rank-1 counts imply zero weights everywhere ------------

void criterion_2() {
  std::mt19937 rng(20240818);
  std::uniform_int_distribution<int> rows_dist(1, 6);
  std::uniform_int_distribution<int> cols_dist(1, 5);
  std::uniform_int_distribution<int> entry(1, 4);

  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t t = rows_dist(rng);
    const std::size_t n = cols_dist(rng);
    std::vector<int> u(t);
    std::vector<int> v(n);
    for (auto& x : u) x = entry(rng);
    for (auto& x : v) x = entry(rng);

    ppmisum::TermSentenceMatrix tsm;
    tsm.counts = ppmisum::CountMatrix(t, n);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < n; ++j) tsm.counts(i, j) = u[i] * v[j];

    const auto ppmi = ppmisum::compute_ppmi(tsm);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(ppmi.weights(i, j)));
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "independent (rank-1) counts weight to zero on 50 random "
                "matrices (max |PPMI| %.2e <= 1e-12)",
                worst);
  report(2, worst <= 1e-12, buf);
}

// --- criterion 3: stemmer fixture and measure examples --------------------

void criterion_3() {
  std::ifstream in(kTestdata / "porter" / "stem_fixture.txt");
  std::size_t checked = 0;
  std::size_t mismatched = 0;
  std::string word;
  std::string expected;
  while (in >> word >> expected) {
    if (ppmisum::porter_stem(word) != expected) ++mismatched;
    ++checked;
  }
  const bool fixture_ok = checked > 0 && mismatched == 0;
  const bool measure_ok = ppmisum::porter_measure("tree") == 0 &&
                          ppmisum::porter_measure("trouble") == 1 &&
                          ppmisum::porter_measure("oaten") == 2;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "stemmer agrees with the sample vocabulary (%zu/%zu words) "
                "and measure gives 0/1/2 on tree/trouble/oaten",
                checked - mismatched, checked);
  report(3, fixture_ok && measure_ok, buf);
}

// --- criterion 4: elimination percentages from the reference word counts --

void criterion_4() {
  struct Row {
    std::size_t total;
    std::size_t kept;
    int expected;
  };
  const std::vector<Row> rows = {
      {1121, 572, 49}, {728, 309, 58}, {994, 468, 53}, {950, 424, 55},
      {731, 382, 48},  {1158, 569, 51}, {408, 180, 56},
  };
  bool ok = true;
  for (const auto& row : rows) {
    if (ppmisum::percent_eliminated(row.total, row.kept) != row.expected) {
      ok = false;
    }
  }
  report(4, ok,
         "stop-word elimination rounding reproduces all seven reference "
         "percentages (49, 58, 53, 55, 48, 51, 56)");
}

// --- criterion 5: power iteration against the Jacobi SVD oracle -----------

void criterion_5() {
  std::mt19937 rng(20240819);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_real_distribution<double> entry(0.0, 3.0);

  double worst_alignment = 1.0;
  double worst_cosine_diff = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    ppmisum::RealMatrix m(rows, cols);
    bool nonzero = false;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = entry(rng);
        nonzero = nonzero || m(i, j) != 0.0;
      }
    }
    if (!nonzero) m(0, 0) = 1.0;

    const auto power = ppmisum::dominant_left_singular_vector(m);
    const auto oracle = ref::dominant_left_singular_vector(m);
    double dot = 0.0;
    for (std::size_t i = 0; i < rows; ++i) dot += power.values[i] * oracle[i];
    worst_alignment = std::min(worst_alignment, std::abs(dot));

    // Random nonempty strictly increasing column subset.
    std::vector<std::size_t> subset;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) == 1) subset.push_back(j);
    if (subset.empty()) subset.push_back(cols - 1);

    ppmisum::PpmiMatrix ppmi;
    ppmi.weights = m;
    ppmi.grand_total = 1;
    const double got = ppmisum::main_topic_cosine(ppmi, subset);
    const double want = ref::main_topic_cosine(m, subset);
    worst_cosine_diff = std::max(worst_cosine_diff, std::abs(got - want));
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "power iteration matches the Jacobi SVD oracle on 50 random "
                "matrices (alignment >= 1 - %.2e, need 1e-8; cosine |diff| "
                "%.2e <= 1e-8)",
                1.0 - worst_alignment, worst_cosine_diff);
  report(5, worst_alignment >= 1.0 - 1e-8 && worst_cosine_diff <= 1e-8, buf);
}

// --- criterion 6: full selection gives cosine exactly one -----------------

void criterion_6() {
  double worst = 0.0;
  std::size_t docs = 0;
  for (const auto& model : analyzed_corpus()) {
    std::vector<std::size_t> all(model.sentence_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const double cosine = ppmisum::main_topic_cosine(model.ppmi, all);
    worst = std::max(worst, std::abs(cosine - 1.0));
    ++docs;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "100%% selection gives cosine 1 on all %zu corpus documents "
                "(max |cos - 1| %.2e <= 1e-9)",
                docs, worst);
  report(6, docs > 0 && worst <= 1e-9, buf);
}

// --- criterion 7: end-to-end sweep, in-range, snapshot, oracle spot-check -

void criterion_7() {
  const auto models = analyzed_corpus();

  const auto start = std::chrono::steady_clock::now();
  std::vector<ppmisum::EvaluationReport> reports;
  for (const auto& model : models)
    reports.push_back(ppmisum::evaluate_sweep(model));
  const double elapsed = seconds_since(start);

  bool in_range = true;
  double overall = 0.0;
  for (const auto& r : reports) {
    for (const auto& row : r.rows)
      in_range = in_range && row.cosine >= 0.0 && row.cosine <= 1.0;
    overall += r.average;
  }
  overall /= static_cast<double>(reports.size());

  // Regression snapshot: per-document sweep values frozen at %.12f.
  bool snapshot_ok = true;
  std::string snapshot_note;
  {
    std::ifstream in(kTestdata / "snapshots" / "evaluate_corpus.csv");
    if (!in) {
      snapshot_ok = false;
      snapshot_note = "snapshot file missing";
    } else {
      std::string line;
      std::getline(in, line);  // header
      for (const auto& r : reports) {
        if (!std::getline(in, line)) {
          snapshot_ok = false;
          snapshot_note = "snapshot too short";
          break;
        }
        std::ostringstream want;
        want << r.document_name;
        char cell[32];
        for (const auto& row : r.rows) {
          std::snprintf(cell, sizeof cell, ",%.12f", row.cosine);
          want << cell;
        }
        std::snprintf(cell, sizeof cell, ",%.12f", r.average);
        want << cell;
        if (line != want.str()) {
          snapshot_ok = false;
          snapshot_note = "snapshot drift at " + r.document_name;
          break;
        }
      }
    }
  }

  // Oracle spot-check: full Jacobi SVD on the smallest document's sweep.
  double worst_oracle_diff = 0.0;
  {
    std::size_t smallest = 0;
    for (std::size_t i = 1; i < models.size(); ++i) {
      if (models[i].ppmi.rows() < models[smallest].ppmi.rows()) smallest = i;
    }
    const auto& model = models[smallest];
    for (const double percent : ppmisum::default_sweep_percents()) {
      const auto summary = ppmisum::summarize(model, percent);
      const double got =
          ppmisum::main_topic_cosine(model.ppmi, summary.selected);
      const double want =
          ref::main_topic_cosine(model.ppmi.weights, summary.selected);
      worst_oracle_diff = std::max(worst_oracle_diff, std::abs(got - want));
    }
  }

  char buf[240];
  std::snprintf(buf, sizeof buf,
                "corpus sweep 10-30%% done in %.2f s < 10 s, cosines in "
                "[0,1], corpus average %.5f, snapshot %s, oracle spot-check "
                "|diff| %.2e <= 1e-8",
                elapsed, overall,
                snapshot_ok ? "matches" : snapshot_note.c_str(),
                worst_oracle_diff);
  report(7,
         elapsed < 10.0 && in_range && snapshot_ok &&
             worst_oracle_diff <= 1e-8,
         buf);
}

// --- criterion 8: uniform rescaling never changes any selection -----------

void criterion_8() {
  bool ok = true;
  for (const auto& model : analyzed_corpus()) {
    ppmisum::PpmiMatrix scaled = model.ppmi;
    for (std::size_t i = 0; i < scaled.weights.rows(); ++i)
      for (std::size_t j = 0; j < scaled.weights.cols(); ++j)
        scaled.weights(i, j) *= 7.3;
    const auto rescored = ppmisum::score_sentences(scaled, model.tsm);

    for (const double percent : {10.0, 15.0, 20.0, 25.0, 30.0}) {
      const auto base = ppmisum::select_summary(model.scores, percent,
                                                model.doc.sentences);
      const auto moved =
          ppmisum::select_summary(rescored, percent, model.doc.sentences);
      ok = ok && base.selected == moved.selected;
    }
  }
  report(8, ok,
         "rescaling every PPMI weight by 7.3 leaves all selected index sets "
         "unchanged across 10-30%");
}

// --- criterion 9: CLI runs are byte-identical ------------------------------

struct CliRun {
  int status = -1;
  std::string out;
  std::string file;
};

CliRun run_cli_capture(const std::string& args, const fs::path& out_path,
                       const fs::path& capture) {
  const std::string cmd = "\"" + kCli + "\" " + args + " --output \"" +
                          out_path.string() + "\" > \"" + capture.string() +
                          "\" 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  CliRun r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(capture);
  r.file = slurp(out_path);
  return r;
}

void criterion_9() {
  const fs::path dir =
      fs::temp_directory_path() /
      ("ppmisum_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::string args = "--mode evaluate --format json \"" +
                           (kTestdata / "corpus").string() + "\"";
  const CliRun a =
      run_cli_capture(args, dir / "first.json", dir / "first.stdout");
  const CliRun b =
      run_cli_capture(args, dir / "second.json", dir / "second.stdout");

  const std::string sum_args = "--format csv \"" +
                               (kTestdata / "corpus").string() + "\"";
  const CliRun c =
      run_cli_capture(sum_args, dir / "first.csv", dir / "first2.stdout");
  const CliRun d =
      run_cli_capture(sum_args, dir / "second.csv", dir / "second2.stdout");

  const bool ok = a.status == 0 && b.status == 0 && c.status == 0 &&
                  d.status == 0 && a.out == b.out && a.file == b.file &&
                  c.out == d.out && c.file == d.file && !a.file.empty() &&
                  !c.file.empty();
  fs::remove_all(dir);
  report(9, ok,
         "two identical CLI runs produce byte-identical stdout and output "
         "files (evaluate json, summarize csv)");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
