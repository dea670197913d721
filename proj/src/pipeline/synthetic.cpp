#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "venuescope/error.hpp"
#include "venuescope/pipeline.hpp"

namespace venuescope {

namespace fs = std::filesystem;

namespace {

struct Triple {
  const char* subject;
  const char* relation;
  const char* object;
};

// A small computing-research hierarchy with an equivalence class, a cycle,
// hyphenated labels and a label longer than the batched kernel accepts.
constexpr Triple kOntology[] = {
    {"computer science", "superTopicOf", "artificial intelligence"},
    {"computer science", "superTopicOf", "human-computer interaction"},
    {"computer science", "superTopicOf", "computer security"},
    {"computer science", "superTopicOf", "software engineering"},
    {"computer science", "superTopicOf", "databases"},
    {"computer science", "superTopicOf", "computer networks"},
    {"artificial intelligence", "superTopicOf", "machine learning"},
    {"machine learning", "superTopicOf", "neural networks"},
    {"neural networks", "superTopicOf", "deep learning"},
    {"artificial intelligence", "superTopicOf", "natural language processing"},
    {"artificial intelligence", "superTopicOf", "knowledge based systems"},
    {"knowledge based systems", "superTopicOf", "expert systems"},
    {"artificial intelligence", "superTopicOf", "ontology matching"},
    {"ontology mapping", "relatedEquivalent", "ontology matching"},
    {"ontology alignment", "primaryLabel", "ontology matching"},
    {"artificial intelligence", "superTopicOf", "robotics"},
    {"robotics", "superTopicOf", "anthropomorphic robots"},
    {"human-computer interaction", "superTopicOf", "user interfaces"},
    {"user interface", "relatedEquivalent", "user interfaces"},
    {"human-computer interaction", "superTopicOf", "virtual reality"},
    {"virtual reality", "superTopicOf", "augmented reality"},
    {"virtual reality", "superTopicOf", "head mounted displays"},
    {"human-computer interaction", "superTopicOf", "mobile computing"},
    {"mobile computing", "superTopicOf", "smartphones"},
    {"mobile computing", "superTopicOf", "wearable computing"},
    {"human-computer interaction", "superTopicOf", "computer supported cooperative work"},
    {"human-computer interaction", "superTopicOf", "haptic interfaces"},
    {"human-computer interaction", "superTopicOf", "e-learning"},
    {"human-computer interaction", "superTopicOf", "affective computing"},
    {"human-computer interaction", "superTopicOf", "computer games"},
    {"computer games", "superTopicOf", "gamification"},
    {"human-computer interaction", "superTopicOf", "visually impaired people"},
    {"human-computer interaction", "superTopicOf", "social media"},
    {"social media", "superTopicOf", "twitter"},
    {"computer security", "superTopicOf", "cryptography"},
    {"computer security", "superTopicOf", "authentication"},
    {"computer security", "superTopicOf", "privacy"},
    {"privacy", "superTopicOf", "personal data"},
    {"software engineering", "superTopicOf", "requirements engineering"},
    {"software engineering", "superTopicOf", "end-user programming"},
    {"databases", "superTopicOf", "information retrieval"},
    {"information retrieval", "superTopicOf", "search engines"},
    {"search engines", "superTopicOf", "information retrieval"},
    {"computer networks", "superTopicOf", "internet of things"},
    {"internet of things", "superTopicOf", "smart homes"},
    {"computer networks", "superTopicOf", "cloud computing"},
    {"databases", "superTopicOf", "big data"},
    {"human-computer interaction", "superTopicOf", "eye tracking"},
    {"human-computer interaction", "superTopicOf", "cognitive load"},
    {"human-computer interaction", "superTopicOf",
     "design and evaluation of interactive systems for older adults living independently at home"},
};

// Labels used in generated text, with the year of peak popularity.
struct TextTopic {
  const char* label;
  int peak;
};

constexpr TextTopic kTextTopics[] = {
    {"expert systems", 1985},
    {"knowledge based systems", 1988},
    {"user interfaces", 1990},
    {"user interface", 1992},
    {"computer supported cooperative work", 1995},
    {"information retrieval", 1997},
    {"neural networks", 1994},
    {"ontology mapping", 2005},
    {"ontology matching", 2008},
    {"ontology alignment", 2009},
    {"virtual reality", 2000},
    {"augmented reality", 2013},
    {"head mounted displays", 2016},
    {"mobile computing", 2006},
    {"smartphones", 2014},
    {"wearable computing", 2015},
    {"e-learning", 2006},
    {"e learning", 2007},
    {"human-computer interaction", 2003},
    {"human computer interaction", 2004},
    {"affective computing", 2010},
    {"computer games", 2009},
    {"gamification", 2015},
    {"visually impaired people", 2011},
    {"social media", 2013},
    {"twitter", 2014},
    {"privacy", 2012},
    {"personal data", 2016},
    {"authentication", 2010},
    {"cryptography", 1996},
    {"requirements engineering", 1999},
    {"end-user programming", 2005},
    {"search engines", 2004},
    {"internet of things", 2016},
    {"smart homes", 2017},
    {"cloud computing", 2013},
    {"big data", 2016},
    {"deep learning", 2018},
    {"machine learning", 2015},
    {"natural language processing", 2010},
    {"anthropomorphic robots", 2012},
    {"haptic interfaces", 2008},
    {"eye tracking", 2011},
    {"cognitive load", 2009},
    {"design and evaluation of interactive systems for older adults living independently at home", 2014},
};

constexpr const char* kOpeners[] = {"towards", "a study of", "evaluating", "understanding", "designing for",
                                    "rethinking", "exploring", "an empirical analysis of", "supporting"};
constexpr const char* kConnectors[] = {"with", "and", "for", "in", "through", "beyond"};
constexpr const char* kFiller[] = {
    "we report a controlled study with participants",
    "results show clear differences between conditions",
    "the design implications are discussed",
    "our findings extend prior work",
    "we present a novel technique",
    "a field deployment lasted several weeks",
    "interviews revealed recurring themes",
    "the prototype was assessed in a laboratory setting",
};

struct Country {
  const char* code;
  double weight;
};

constexpr Country kCountries[] = {
    {"US", 30}, {"GB", 9}, {"DE", 7}, {"CA", 6}, {"FR", 4}, {"CN", 5}, {"JP", 4}, {"KR", 4}, {"AU", 4},
    {"NL", 3},  {"SE", 3}, {"FI", 3}, {"DK", 3}, {"CH", 3}, {"IT", 3}, {"ES", 2}, {"BR", 2}, {"IN", 2},
    {"IL", 2},  {"SG", 2}, {"AT", 2}, {"NO", 1}, {"PT", 1}, {"IE", 1}, {"NZ", 1}, {"GR", 1}, {"BE", 1},
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <typename T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[below(N)];
  }
  std::size_t weighted(const std::vector<double>& cumulative) {
    const double r = unit() * cumulative.back();
    return static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
  }

 private:
  std::mt19937_64 gen_;
};

std::vector<double> cumulative(const std::vector<double>& w) {
  std::vector<double> c(w.size());
  double s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c[i] = s += w[i];
  return c;
}

struct GenInstitution {
  std::string id;
  std::string name;
  std::string country;
};

std::ofstream open(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  return out;
}

}  // namespace

void write_synthetic_dataset(const fs::path& dir, const SyntheticSpec& spec) {
  if (spec.first_year >= spec.last_year) throw std::invalid_argument("synthetic: first_year must precede last_year");
  fs::create_directories(dir);
  Rng rng(spec.seed);

  // Institutions: a few per country, plus some with no recorded country.
  std::vector<GenInstitution> institutions;
  std::vector<double> inst_weight;
  for (const auto& c : kCountries) {
    const int n = 1 + static_cast<int>(c.weight / 3);
    for (int k = 0; k < n; ++k) {
      const auto id = fmt::format("I{:04d}", institutions.size() + 1);
      const auto name = k % 3 == 2 ? fmt::format("Institute of Technology, {} campus {}", c.code, k)
                                   : fmt::format("University {} {}", c.code, k + 1);
      institutions.push_back({id, name, c.code});
      inst_weight.push_back(c.weight / n);
    }
  }
  for (int k = 0; k < 3; ++k) {
    institutions.push_back({fmt::format("I{:04d}", institutions.size() + 1), fmt::format("Research Lab {}", k + 1), ""});
    inst_weight.push_back(0.5);
  }
  const auto inst_cum = cumulative(inst_weight);

  // Authors keep a home institution but occasionally publish elsewhere.
  const std::size_t n_authors = std::max<std::size_t>(20, spec.papers * 3 / 2);
  std::vector<std::size_t> author_home(n_authors);
  for (auto& h : author_home) h = rng.weighted(inst_cum);

  // Publication years grow roughly linearly towards the end of the range.
  const int span = spec.last_year - spec.first_year + 1;
  std::vector<double> year_weight(span);
  for (int i = 0; i < span; ++i) year_weight[i] = 1.0 + 3.0 * i / span;
  const auto year_cum = cumulative(year_weight);
  std::vector<std::optional<int>> years(spec.papers);
  for (auto& y : years) y = spec.first_year + static_cast<int>(rng.weighted(year_cum));
  std::sort(years.begin(), years.end());
  for (auto& y : years)
    if (rng.chance(0.01)) y.reset();

  std::vector<std::string> other_venues;
  std::vector<double> venue_weight;
  for (int v = 1; v <= 24; ++v) {
    other_venues.push_back(fmt::format("V-{}{:02d}", v % 2 ? "J" : "C", v));
    venue_weight.push_back(1.0 / v);
  }
  const auto venue_cum = cumulative(venue_weight);

  std::vector<std::string> ids(spec.papers);
  std::vector<std::string> venues(spec.papers);
  std::vector<std::vector<std::size_t>> by_venue_family(3);  // 0 IJHCS family, 1 CHI, 2 rest

  auto topic_weights = [&](int year) {
    std::vector<double> w;
    for (const auto& t : kTextTopics) w.push_back(std::exp(-std::pow(year - t.peak, 2) / (2.0 * 36.0)) + 0.02);
    return cumulative(w);
  };
  std::vector<std::vector<double>> topic_cum_by_year;
  for (int y = spec.first_year; y <= spec.last_year; ++y) topic_cum_by_year.push_back(topic_weights(y));
  const auto topic_cum_any = topic_weights((spec.first_year + spec.last_year) / 2);

  auto open_dump = open(dir / "dump.tsv");
  std::ofstream& dump = open_dump;
  dump << "paper_id\ttitle\tyear\tvenue_id\tdoi\tabstract\tkeywords\tauthorships\treferences\n";

  std::size_t serial = 0;
  for (std::size_t i = 0; i < spec.papers; ++i) {
    ids[i] = fmt::format("P{:07d}", ++serial);
    const auto& year = years[i];

    int family;
    const double r = rng.unit();
    if (r < 0.02) {
      family = 2;
      venues[i] = "";
    } else if (r < 0.12) {
      family = 0;
      venues[i] = year && *year < 1994 ? "V-IJMMS" : "V-IJHCS";
    } else if (r < 0.27) {
      family = 1;
      venues[i] = "V-CHI";
    } else {
      family = 2;
      venues[i] = other_venues[rng.weighted(venue_cum)];
    }

    // Text built around one to three topic labels, occasionally misspelled.
    const auto& tcum = year ? topic_cum_by_year[*year - spec.first_year] : topic_cum_any;
    std::vector<std::string> labels;
    const auto n_topics = 1 + rng.below(3);
    for (std::size_t k = 0; k < n_topics; ++k) {
      std::string label = kTextTopics[rng.weighted(tcum)].label;
      if (label.size() >= 17 && rng.chance(0.1)) label.erase(1 + rng.below(label.size() - 2), 1);
      labels.push_back(std::move(label));
    }
    std::string title = fmt::format("{} {}", rng.pick(kOpeners), labels[0]);
    if (labels.size() > 1) title += fmt::format(" {} {}", rng.pick(kConnectors), labels[1]);
    if (rng.chance(0.5)) title[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(title[0])));
    std::string abstract;
    if (rng.chance(0.85)) {
      abstract = fmt::format("{}. {} {}.", rng.pick(kFiller), labels.back(), rng.pick(kFiller));
      if (rng.chance(0.3)) abstract += fmt::format(" {}'s role is considered.", labels.front());
    }
    const std::string keywords = rng.chance(0.6) ? fmt::format("{}", fmt::join(labels, "; ")) : "";
    const std::string doi = rng.chance(0.9) ? fmt::format("10.5555/{}", ids[i]) : "";

    // Authorships: mostly single-country teams.
    const auto n_auth = 1 + rng.below(rng.chance(0.2) ? 6 : 3);
    std::vector<std::string> auth;
    for (std::size_t k = 0; k < n_auth; ++k) {
      const auto a = rng.below(n_authors);
      std::string inst;
      if (!rng.chance(0.04)) inst = institutions[rng.chance(0.1) ? rng.weighted(inst_cum) : author_home[a]].id;
      auth.push_back(inst.empty() ? fmt::format("A{:06d}", a) : fmt::format("A{:06d},{}", a, inst));
    }

    // References point at earlier papers, favouring the same venue family.
    std::vector<std::string> refs;
    const double progress = year ? static_cast<double>(*year - spec.first_year) / span : 0.5;
    const auto n_refs = i == 0 ? 0 : rng.below(4 + static_cast<std::uint64_t>(14 * progress));
    for (std::size_t k = 0; k < n_refs; ++k) {
      if (rng.chance(0.03)) {
        refs.push_back(fmt::format("X{:07d}", rng.below(1'000'000)));
      } else if (const auto& fam = by_venue_family[family]; !fam.empty() && rng.chance(0.4)) {
        refs.push_back(ids[fam[rng.below(fam.size())]]);
      } else {
        refs.push_back(ids[rng.below(i)]);
      }
    }
    if (!refs.empty() && rng.chance(0.01)) refs.push_back(refs.front());
    if (rng.chance(0.005)) refs.push_back(ids[i]);
    by_venue_family[family].push_back(i);

    dump << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", ids[i], title, year ? std::to_string(*year) : "",
                        venues[i], doi, abstract, keywords, fmt::join(auth, ";"), fmt::join(refs, ";"));

    if (spec.inject_malformed_rows && i % 400 == 199) {
      dump << fmt::format("P{:07d}\tbroken row\t19x5\tV-CHI\t\t\t\t\t\n", ++serial);
      dump << fmt::format("{}\tduplicate of an earlier row\t2000\tV-CHI\t\t\t\t\t\n", ids[i / 2]);
    }
  }
  dump.flush();
  if (!dump) throw IoError("write failure on dump.tsv");

  auto schema = open(dir / "schema.txt");
  schema << "# column layout of dump.tsv\nheader=true\npaper_id=0\ntitle=1\nyear=2\nvenue_id=3\ndoi=4\n"
            "abstract=5\nkeywords=6\nauthorships=7\nreferences=8\n";

  auto insts = open(dir / "institutions.tsv");
  for (const auto& inst : institutions) insts << fmt::format("{}\t{}\t{}\n", inst.id, inst.name, inst.country);
  if (spec.inject_malformed_rows) insts << "I9999\tmissing country column\n";

  auto onto = open(dir / "ontology.tsv");
  for (const auto& t : kOntology) onto << fmt::format("{}\t{}\t{}\n", t.subject, t.relation, t.object);

  auto config = open(dir / "config.txt");
  config << fmt::format(
      "dump = dump.tsv\nschema = schema.txt\ninstitutions = institutions.tsv\nontology = ontology.tsv\n"
      "venue.IJHCS = V-IJHCS, V-IJMMS\nvenue.CHI = V-CHI\nthreshold = 0.94\nstart_year = 2009\nend_year = 2018\n"
      "group_thresholds = {}\nmode = lenient\nout = out\n",
      fmt::join(spec.group_thresholds, ","));
  if (!schema || !insts || !onto || !config) throw IoError("write failure in " + dir.string());
}

}  // namespace venuescope
