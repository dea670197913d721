// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "builders.hpp"
#include "conservation.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "tempdir.hpp"
#include "toy_ontology.hpp"
#include "venuescope/classifier.hpp"
#include "venuescope/metrics.hpp"
#include "venuescope/pipeline.hpp"

using namespace venuescope;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kSpearmanTolerance = 1e-12;
constexpr double kSpearmanBudgetSeconds = 5.0;
constexpr double kLevenshteinBudgetSeconds = 30.0;
constexpr double kPipelineBudgetSeconds = 120.0;
constexpr std::size_t kPipelinePapers = 100000;
constexpr double kRatioTolerance = 5e-4;

const std::string kCli = VENUESCOPE_CLI;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void criterion(const std::string& name, const std::function<Check()>& body) {
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = fmt::format("exception: {}", e.what());
  }
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS " : "FAIL ") << name << (c.detail.empty() ? "" : " -- " + c.detail) << std::endl;
}

Check spearman_equivalence() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  double worst = 0;
  auto compare = [&](const std::vector<double>& x, const std::vector<double>& y) {
    const auto got = spearman_rho(x, y);
    const auto want = oracle::spearman(x, y);
    ++cases;
    c.require(got.has_value() == want.has_value(), fmt::format("definedness differs at case {}", cases));
    if (got && want) {
      worst = std::max(worst, std::abs(*got - *want));
      c.require(std::abs(*got - *want) <= kSpearmanTolerance, fmt::format("|delta| {} at case {}", *got - *want, cases));
    }
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<double> x(n), y(n);
    std::iota(x.begin(), x.end(), 1.0);
    std::iota(y.begin(), y.end(), 1.0);
    do compare(x, y);
    while (std::next_permutation(y.begin(), y.end()));
  }
  gen::Rng rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const auto n = 2 + rng.below(9);
    const auto levels = 1 + rng.below(n);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = static_cast<double>(rng.below(levels));
    for (auto& v : y) v = static_cast<double>(rng.below(levels));
    compare(x, y);
  }
  const std::vector<double> a{1, 2, 3}, b{1, 3, 2};
  const auto half = spearman_rho(a, b);
  c.require(half && std::abs(*half - 0.5) <= kSpearmanTolerance, "[1,2,3] vs [1,3,2] is not 0.5");
  const auto secs = seconds_since(t0);
  c.require(secs < kSpearmanBudgetSeconds, fmt::format("took {:.2f}s", secs));
  if (c.ok) c.detail = fmt::format("{} cases, max |delta| {:.3g}, {:.3f}s", cases, worst, secs);
  return c;
}

Check levenshtein_equivalence() {
  Check c;
  const auto t0 = Clock::now();
  std::vector<std::string> all{""};
  for (std::size_t begin = 0, len = 1; len <= 6; ++len) {
    const auto end = all.size();
    for (auto i = begin; i < end; ++i)
      for (const char ch : {'a', 'b', 'c'}) all.push_back(all[i] + ch);
    begin = end;
  }
  const simd::PatternBank bank(all);
  std::vector<simd::Isa> isas;
  for (const auto isa : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon})
    if (simd::isa_available(isa)) isas.push_back(isa);

  std::vector<std::uint32_t> out(bank.block_count() * simd::PatternBank::kLanes);
  std::size_t pairs = 0;
  for (const auto& text : all) {
    std::vector<double> want(all.size());
    for (std::size_t j = 0; j < all.size(); ++j) {
      want[j] = oracle::similarity(text, all[j]);
      c.require(levenshtein_similarity(text, all[j]) == want[j], fmt::format("reference '{}' vs '{}'", text, all[j]));
    }
    for (const auto isa : isas) {
      simd::batch_edit_distance(bank, 0, bank.block_count(), text, out, isa);
      for (std::size_t j = 0; j < all.size(); ++j)
        c.require(simd::similarity_from_distance(out[j], all[j].size(), text.size()) == want[j],
                  fmt::format("{} kernel '{}' vs '{}'", simd::isa_name(isa), text, all[j]));
    }
    pairs += all.size();
    if (!c.ok) break;
  }
  const auto secs = seconds_since(t0);
  c.require(secs < kLevenshteinBudgetSeconds, fmt::format("took {:.2f}s", secs));
  std::string names;
  for (const auto isa : isas) names += fmt::format("{}{}", names.empty() ? "" : "+", simd::isa_name(isa));
  if (c.ok) c.detail = fmt::format("{} strings, {} pairs, reference+{}, {:.2f}s", all.size(), pairs, names, secs);
  return c;
}

// Label variants at edit distance 0..3 used as classifier inputs.
std::vector<std::string> perturbed_texts(const TopicOntology& onto) {
  gen::Rng rng(77);
  std::vector<std::string> texts;
  for (const auto& [label, index] : onto.label_index()) {
    for (int edits = 0; edits <= 3; ++edits) {
      std::string s = label;
      for (int e = 0; e < edits && !s.empty(); ++e) {
        const auto pos = rng.below(s.size());
        switch (rng.below(3)) {
          case 0: s.erase(pos, 1); break;
          case 1: s[pos] = static_cast<char>('a' + rng.below(26)); break;
          default: s.insert(pos, 1, static_cast<char>('a' + rng.below(26)));
        }
      }
      texts.push_back("A study of " + s);
    }
  }
  return texts;
}

Check classifier_procedure() {
  Check c;
  const auto onto = fixture::ontology_from(kToyOntology);
  c.require(onto.size() == 50, fmt::format("toy ontology has {} topics", onto.size()));

  const double thresholds[] = {0.80, 0.90, 0.94, 1.0};
  const auto texts = perturbed_texts(onto);
  std::vector<Classifier> cs;
  for (const auto t : thresholds) cs.emplace_back(onto, t);
  std::size_t shrinking = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    std::vector<TopicAnnotation> a;
    for (const auto& cl : cs) a.push_back(cl.classify_text("p", texts[i]));
    for (std::size_t k = 1; k < a.size(); ++k) {
      c.require(std::includes(a[k - 1].all_topics.begin(), a[k - 1].all_topics.end(), a[k].all_topics.begin(),
                              a[k].all_topics.end()),
                fmt::format("topics grow from {} to {} on '{}'", thresholds[k - 1], thresholds[k], texts[i]));
      if (a[k].all_topics.size() < a[k - 1].all_topics.size()) ++shrinking;
    }
  }
  c.require(shrinking > 0, "no text changed across thresholds");

  const auto chain = Classifier(onto).classify_text("p", "Training neural networks");
  c.require(chain.direct_topics.count("neural_networks") == 1, "neural networks not matched");
  c.require(chain.enriched_topics.count("machine_learning") && chain.enriched_topics.count("artificial_intelligence"),
            "closure lacks machine learning or artificial intelligence");

  const auto mapping = Classifier(onto).classify_text("p", "An ontology mapping approach");
  c.require(mapping.direct_topics == TopicSet{"ontology_matching"}, "ontology mapping not canonicalized");

  const auto ml = onto.index_of("machine_learning");
  c.require(ml.has_value(), "machine learning missing");
  const auto sim = levenshtein_similarity("machine learnin", "machine learning");
  c.require(sim == 0.9375, fmt::format("similarity {} != 0.9375", sim));
  const auto at94 = Classifier(onto, 0.94).match("machine learnin");
  const auto at93 = Classifier(onto, 0.9375).match("machine learnin");
  c.require(std::count(at94.begin(), at94.end(), *ml) == 0, "0.9375 accepted at threshold 0.94");
  c.require(std::count(at93.begin(), at93.end(), *ml) == 1, "0.9375 rejected at threshold 0.9375");
  if (c.ok) c.detail = fmt::format("{} texts x {} thresholds, {} strict shrinkages", texts.size(), cs.size(), shrinking);
  return c;
}

Check knowledge_debit_fixture() {
  Check c;
  const auto store = fixture::debit_store();
  const auto d = knowledge_debit(extract_venue_dataset(store, "V"));
  c.require(d.size() == 3, fmt::format("{} countries", d.size()));
  if (!c.ok) return c;
  c.require(d[0].country_code == "JP" && d[0].never_cited() && d[0].citing_contribs == 2, "JP is not never-cited 2/0");
  c.require(d[1].country_code == "US" && d[1].debit == 2.0 && d[1].citing_contribs == 4 && d[1].cited_contribs == 2,
            "US is not 4/2 = 2.0");
  c.require(d[2].country_code == "GB" && d[2].debit == 1.0 && d[2].citing_contribs == 3 && d[2].cited_contribs == 3,
            "GB is not 3/3 = 1.0");
  if (c.ok) c.detail = "JP never cited, US 2.0, GB 1.0";
  return c;
}

Check conservation_suite() {
  Check c;
  std::size_t seeds = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed, ++seeds) {
    const auto v = conservation::violations(seed);
    c.require(v.empty(), v.empty() ? "" : v.front());
  }
  if (c.ok) c.detail = fmt::format("{} seeded corpora", seeds);
  return c;
}

Check solo_and_first_author() {
  Check c;
  const auto store = fixture::solo_store();
  const auto corpus = extract_venue_dataset(store, "V");
  using E = std::vector<CountTable::Entry>;
  c.require(solo_country_papers(corpus, 4).entries() == E{{"US", 6}, {"GB", 5}, {"DE", 4}}, "threshold 4");
  c.require(solo_country_papers(corpus, 5).entries() == E{{"US", 6}, {"GB", 5}}, "threshold 5");
  c.require(solo_country_papers(corpus, 6).entries() == E{{"US", 6}}, "threshold 6");

  const auto fa_store = fixture::first_author_store();
  const auto t = first_author_institution_trends(extract_venue_dataset(fa_store, "V"));
  c.require(t.per_year.size() == 3, "expected three years");
  if (!c.ok) return c;
  const double want[] = {100.0 / 3.0, 200.0 / 3.0, 0.0};
  for (std::size_t i = 0; i < 3; ++i)
    c.require(t.per_year[i].never_first_pct() == want[i],
              fmt::format("year {} never-first {}", *t.per_year[i].year, t.per_year[i].never_first_pct()));
  c.require(t.corpus_wide.never_first_pct() == 50.0, "corpus-wide never-first");
  if (c.ok) c.detail = "solo 3/2/1 countries at 4/5/6; never-first 33.3%, 66.7%, 0%";
  return c;
}

Check trend_ranking() {
  Check c;
  const TopicYearCounts three = {
      {"user_interfaces", {{2009, 142}, {2018, 222}}},
      {"gamification", {{2018, 12}}},
      {"eye_tracking", {{2009, 10}, {2018, 10}}},
  };
  // One band holding all three.
  const std::uint64_t single[] = {5};
  const auto one = topic_trend_analysis(three, 2009, 2018, single);
  c.require(one.size() == 1 && one[0].topics.size() == 3, "single band does not hold the three topics");
  if (!c.ok) return c;
  const auto& r = one[0].topics;
  c.require(r[0].topic_id == "gamification" && r[0].infinite_growth(), "infinite growth not first");
  c.require(r[1].topic_id == "user_interfaces" && std::abs(r[1].ratio() - 1.563) <= kRatioTolerance, "1.563 not second");
  c.require(r[2].topic_id == "eye_tracking" && r[2].ratio() == 1.0, "1.0 not third");

  const std::uint64_t bands_at[] = {60, 20, 10, 5};
  const auto bands = topic_trend_analysis(fixture::trend_counts(), 2009, 2018, bands_at);
  c.require(bands.size() == 4, "expected four bands");
  std::size_t placed = 0;
  for (const auto& b : bands)
    for (const auto& row : b.topics) {
      ++placed;
      c.require(row.end_count >= b.min_count && (!b.max_count || row.end_count < *b.max_count),
                fmt::format("{} ({}) outside [{}, {})", row.topic_id, row.end_count, b.min_count,
                            b.max_count ? std::to_string(*b.max_count) : "inf"));
    }
  c.require(placed == 8, fmt::format("{} topics placed, expected 8 (end counts 4 and 0 fall below 5)", placed));
  c.require(bands[2].topics.size() == 3 && bands[2].topics[0].topic_id == "gamification" &&
                bands[2].topics.back().topic_id == "eye_tracking",
            "band [10,20) order");
  if (c.ok) c.detail = "inf > 1.563 > 1.0; bands [60,inf) [20,60) [10,20) [5,10)";
  return c;
}

int run_cli(const std::string& args) {
  const auto status = std::system(fmt::format("\"{}\" {} >/dev/null 2>&1", kCli, args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check pipeline_determinism() {
  Check c;
  fixture::TempDir dir;
  SyntheticSpec spec;
  spec.papers = kPipelinePapers;
  spec.seed = 99;
  write_synthetic_dataset(dir.path(), spec);
  double worst = 0;
  for (const auto* name : {"run1", "run2"}) {
    const auto t0 = Clock::now();
    const auto code = run_cli(fmt::format("all -c \"{}\" --out \"{}\"", (dir / "config.txt").string(), (dir / name).string()));
    const auto secs = seconds_since(t0);
    worst = std::max(worst, secs);
    c.require(code == 0, fmt::format("{} exited {}", name, code));
    c.require(secs < kPipelineBudgetSeconds, fmt::format("{} took {:.1f}s", name, secs));
  }
  if (!c.ok) return c;
  const auto a = fixture::tree_of(dir / "run1");
  const auto b = fixture::tree_of(dir / "run2");
  c.require(a.size() > 50, fmt::format("only {} output files", a.size()));
  c.require(a == b, "output trees differ");
  if (c.ok) c.detail = fmt::format("{} records, {} files identical, slowest run {:.1f}s", kPipelinePapers, a.size(), worst);
  return c;
}

}  // namespace

int main() {
  std::cout << "kernel: " << simd::isa_name(simd::detect_isa()) << std::endl;
  criterion("spearman-oracle-equivalence", spearman_equivalence);
  criterion("levenshtein-oracle-equivalence", levenshtein_equivalence);
  criterion("classifier-procedure", classifier_procedure);
  criterion("knowledge-debit-fixture", knowledge_debit_fixture);
  criterion("conservation-suite", conservation_suite);
  criterion("solo-and-first-author", solo_and_first_author);
  criterion("trend-ranking", trend_ranking);
  criterion("pipeline-determinism-100k", pipeline_determinism);
  std::cout << fmt::format("{} of 8 criteria failed", failures) << std::endl;
  return failures;
}
