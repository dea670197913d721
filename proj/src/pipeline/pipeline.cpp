#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "venuescope/classifier.hpp"
#include "venuescope/error.hpp"
#include "venuescope/pipeline.hpp"
#include "venuescope/report.hpp"

namespace venuescope {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kToolVersion = "venuescope 1.0.0";

// Writes through a sibling temporary so a failed stage never leaves a
// truncated artifact that a later stage would accept.
void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failure on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError(fmt::format("cannot move {} into place: {}", path.string(), ec.message()));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void require(const fs::path& path, std::string_view stage, std::string_view producer) {
  if (!fs::exists(path))
    throw DependencyError(path.string(), fmt::format("{} needs the output of `{}`, which is missing", stage, producer));
}

std::optional<std::string> manifest_value(const std::string& text, std::string_view key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.size() > key.size() && line.compare(0, key.size(), key) == 0 && line[key.size()] == '=')
      return line.substr(key.size() + 1);
  return std::nullopt;
}

struct Layout {
  fs::path root;
  fs::path store() const { return root / "store"; }
  fs::path papers() const { return store() / "papers.tsv"; }
  fs::path institutions() const { return store() / "institutions.tsv"; }
  fs::path ingest_stats() const { return store() / "ingest.txt"; }
  fs::path venue(const std::string& name) const { return root / "venues" / name; }
  fs::path venue_manifest(const std::string& name) const { return venue(name) / "manifest.txt"; }
  fs::path ids(const std::string& name, std::string_view part) const {
    return venue(name) / fmt::format("{}.ids", part);
  }
  fs::path annotations(const std::string& name) const { return venue(name) / "annotations.tsv"; }
  fs::path annotation_summary(const std::string& name) const { return venue(name) / "annotation_summary.txt"; }
  fs::path report_summary(const std::string& name) const { return venue(name) / "report_summary.txt"; }
  fs::path reports(const std::string& name) const { return venue(name) / "reports"; }
  fs::path run_manifest() const { return root / "run_manifest.txt"; }
};

class Runner {
 public:
  Runner(const PipelineConfig& config, std::ostream* log) : cfg_(config), out_{config.out_dir()}, log_(log) {}

  void ingest() {
    auto institutions = load_institutions_file(cfg_.resolve(cfg_.institutions), cfg_.mode);
    const auto schema = cfg_.schema.empty() ? Schema::canonical() : Schema::parse_file(cfg_.resolve(cfg_.schema));
    store_ = ingest_file(cfg_.resolve(cfg_.dump), schema, cfg_.mode, std::move(institutions));
    const auto& s = store_->stats();

    std::ostringstream papers, insts;
    write_papers(papers, *store_);
    write_institutions(insts, store_->institutions());
    emit(out_.papers(), papers.str());
    emit(out_.institutions(), insts.str());
    emit(out_.store() / "schema.txt", Schema::canonical().to_text());
    emit(out_.ingest_stats(),
         fmt::format("records={}\nrows={}\nskipped_rows={}\nduplicate_rows={}\nself_references_dropped={}\n"
                     "authorships={}\ninstitutions={}\ninstitutions_skipped={}\n",
                     store_->size(), s.rows, s.skipped, s.duplicates, s.self_references, s.authorships,
                     store_->institutions().size(), s.institutions_skipped));
    say("ingest: {} records from {} rows ({} skipped, {} duplicates)", store_->size(), s.rows, s.skipped, s.duplicates);
  }

  void extract() {
    const auto& store = load_store("extract");
    for (const auto& name : cfg_.venue_names()) {
      const auto& ids = cfg_.venues.at(name);
      auto corpus = extract_venue_dataset(store, std::span<const std::string>(ids));
      std::ostringstream manifest;
      write_corpus_manifest(manifest, corpus);
      emit(out_.venue_manifest(name), manifest.str());
      emit(out_.ids(name, "accepted"), id_list(store, corpus.accepted()));
      emit(out_.ids(name, "citing"), id_list(store, corpus.citing()));
      emit(out_.ids(name, "cited"), id_list(store, corpus.cited()));
      say("extract {}: {} accepted, {} citing, {} cited, {} dangling references", name, corpus.accepted().size(),
          corpus.citing().size(), corpus.cited().size(), corpus.dangling_references());
      corpora_.insert_or_assign(name, std::move(corpus));
    }
  }

  void classify() {
    const auto& store = load_store("classify");
    const auto& ontology = load_ontology_once();
    const auto stopwords = cfg_.stopwords.empty() ? StopwordList::english()
                                                  : StopwordList::load_file(cfg_.resolve(cfg_.stopwords));
    const Classifier classifier(ontology, cfg_.threshold, stopwords);
    say("classify: {} topics, threshold {}, stopwords {}, kernel {}", ontology.size(), cfg_.threshold,
        stopwords.version, simd::isa_name(classifier.isa()));
    for (const auto& name : cfg_.venue_names()) {
      const auto& corpus = load_corpus(name, store, "classify");
      auto annotations = classify_corpus(store, corpus.accepted(), classifier, cfg_.threads);
      std::ostringstream text;
      write_annotations(text, annotations, classifier);
      emit(out_.annotations(name), text.str());
      emit(out_.annotation_summary(name), annotation_summary(corpus, annotations, stopwords.version));
      annotations_.insert_or_assign(name, std::move(annotations));
    }
  }

  void report() {
    const auto& store = load_store("report");
    const auto& ontology = load_ontology_once();
    for (const auto& name : cfg_.venue_names()) {
      const auto& corpus = load_corpus(name, store, "report");
      const auto& annotations = load_annotations(name);
      const auto written = report::write_reports(out_.reports(name), corpus, annotations, ontology, cfg_.report);
      for (const auto& f : written) artifacts_.push_back(relative(out_.reports(name) / f));
      const auto memory = reference_memory_matrix(corpus);
      emit(out_.report_summary(name),
           fmt::format("reference_memory_placed={}\nreference_memory_excluded={}\nreport_files={}\n", memory.total(),
                       memory.excluded, written.size()));
      say("report {}: {} files in {}", name, written.size(), out_.reports(name).string());
    }
  }

  void write_run_manifest(Command command) {
    std::string m;
    m += fmt::format("command={}\ntool={}\n", command_name(command), kToolVersion);
    const auto config_text = cfg_.canonical_text();
    m += fmt::format("config_sha256={}\n\n[config]\n{}\n[inputs]\n", sha256_hex(config_text), config_text);
    auto digest = [&](std::string_view key, const std::string& path) {
      if (path.empty()) return;
      const auto p = cfg_.resolve(path);
      m += fmt::format("{}_sha256={}\n", key, fs::exists(p) ? sha256_file(p) : std::string("absent"));
    };
    digest("dump", cfg_.dump);
    digest("schema", cfg_.schema);
    digest("institutions", cfg_.institutions);
    digest("ontology", cfg_.ontology);
    digest("stopwords", cfg_.stopwords);

    auto section = [&](const std::string& title, std::initializer_list<fs::path> files) {
      std::string body;
      for (const auto& f : files)
        if (fs::exists(f)) body += read_file(f);
      if (!body.empty()) m += fmt::format("\n[{}]\n{}", title, body);
    };
    section("store", {out_.ingest_stats()});
    for (const auto& name : cfg_.venue_names())
      section("venue " + name,
              {out_.venue_manifest(name), out_.annotation_summary(name), out_.report_summary(name)});
    emit(out_.run_manifest(), m);
  }

  std::vector<std::string> take_artifacts() { return std::move(artifacts_); }

 private:
  template <typename... Args>
  void say(fmt::format_string<Args...> f, Args&&... args) {
    if (log_) *log_ << fmt::format(f, std::forward<Args>(args)...) << '\n';
  }

  std::string relative(const fs::path& p) const { return p.lexically_relative(out_.root).generic_string(); }

  void emit(const fs::path& path, const std::string& content) {
    write_file(path, content);
    artifacts_.push_back(relative(path));
  }

  static std::string id_list(const CorpusStore& store, std::span<const std::uint32_t> indices) {
    std::string s;
    for (const auto i : indices) {
      s += store.papers()[i].paper_id;
      s += '\n';
    }
    return s;
  }

  const CorpusStore& load_store(std::string_view stage) {
    if (store_) return *store_;
    require(out_.papers(), stage, "ingest");
    require(out_.institutions(), stage, "ingest");
    require(out_.ingest_stats(), stage, "ingest");
    auto institutions = load_institutions_file(out_.institutions(), IngestMode::strict);
    auto reloaded = ingest_file(out_.papers(), Schema::canonical(), IngestMode::strict, std::move(institutions));

    // Carry the counters of the original ingest rather than those of the
    // already-clean reload.
    const auto text = read_file(out_.ingest_stats());
    auto counter = [&](std::string_view key) -> std::size_t {
      const auto v = manifest_value(text, key);
      std::size_t n = 0;
      if (v) std::from_chars(v->data(), v->data() + v->size(), n);
      return n;
    };
    IngestStats stats;
    stats.rows = counter("rows");
    stats.skipped = counter("skipped_rows");
    stats.duplicates = counter("duplicate_rows");
    stats.self_references = counter("self_references_dropped");
    stats.authorships = counter("authorships");
    stats.institutions_skipped = counter("institutions_skipped");
    std::vector<PaperRecord> papers(reloaded.papers().begin(), reloaded.papers().end());
    std::vector<Institution> insts(reloaded.institutions().begin(), reloaded.institutions().end());
    store_.emplace(std::move(papers), std::move(insts), stats);
    return *store_;
  }

  const VenueCorpus& load_corpus(const std::string& name, const CorpusStore& store, std::string_view stage) {
    if (const auto it = corpora_.find(name); it != corpora_.end()) return it->second;
    require(out_.venue_manifest(name), stage, "extract");
    const auto manifest = read_file(out_.venue_manifest(name));
    auto indices = [&](std::string_view part) {
      const auto path = out_.ids(name, part);
      require(path, stage, "extract");
      std::vector<std::uint32_t> out;
      std::istringstream in(read_file(path));
      std::string id;
      while (std::getline(in, id)) {
        if (id.empty()) continue;
        const auto i = store.index_of(id);
        if (!i) throw NotFoundError(fmt::format("{} lists {}, which is not in the store; rerun extract", path.string(), id));
        out.push_back(*i);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    std::size_t dangling = 0;
    if (const auto v = manifest_value(manifest, "dangling_references"))
      std::from_chars(v->data(), v->data() + v->size(), dangling);
    auto [it, inserted] = corpora_.try_emplace(name, store, cfg_.venues.at(name), indices("accepted"),
                                               indices("citing"), indices("cited"), dangling);
    return it->second;
  }

  const std::map<std::string, TopicAnnotation>& load_annotations(const std::string& name) {
    if (const auto it = annotations_.find(name); it != annotations_.end()) return it->second;
    require(out_.annotations(name), "report", "classify");
    std::istringstream in(read_file(out_.annotations(name)));
    return annotations_.emplace(name, read_annotations(in)).first->second;
  }

  const TopicOntology& load_ontology_once() {
    if (ontology_) return *ontology_;
    ontology_ = load_ontology_file(cfg_.resolve(cfg_.ontology));
    for (const auto& c : ontology_->label_collisions()) say("ontology: label collision {}", c);
    return *ontology_;
  }

  std::string annotation_summary(const VenueCorpus& corpus, const std::map<std::string, TopicAnnotation>& annotations,
                                 const std::string& stopwords_version) const {
    std::size_t papers = 0, annotated = 0, topics = 0, direct = 0, window_papers = 0, window_topics = 0;
    for (const auto i : corpus.accepted()) {
      const auto& p = corpus.paper(i);
      const auto it = annotations.find(p.paper_id);
      const std::size_t n = it == annotations.end() ? 0 : it->second.all_topics.size();
      ++papers;
      topics += n;
      if (n > 0) ++annotated;
      if (it != annotations.end()) direct += it->second.direct_topics.size();
      if (p.year && *p.year >= cfg_.report.start_year && *p.year <= cfg_.report.end_year) {
        ++window_papers;
        window_topics += n;
      }
    }
    auto mean = [](std::size_t num, std::size_t den) {
      return report::format_real(den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den));
    };
    return fmt::format(
        "stopwords={}\nclassified_papers={}\nannotated_papers={}\ntopic_assignments={}\ndirect_assignments={}\n"
        "mean_topics_per_paper={}\nmean_topics_per_annotated_paper={}\nwindow_papers={}\n"
        "mean_topics_per_paper_{}_{}={}\n",
        stopwords_version, papers, annotated, topics, direct, mean(topics, papers), mean(topics, annotated),
        window_papers, cfg_.report.start_year, cfg_.report.end_year, mean(window_topics, window_papers));
  }

  const PipelineConfig& cfg_;
  Layout out_;
  std::ostream* log_;
  std::optional<CorpusStore> store_;
  std::optional<TopicOntology> ontology_;
  std::map<std::string, VenueCorpus> corpora_;
  std::map<std::string, std::map<std::string, TopicAnnotation>> annotations_;
  std::vector<std::string> artifacts_;
};

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "ingest") return Command::ingest;
  if (name == "extract") return Command::extract;
  if (name == "classify") return Command::classify;
  if (name == "report") return Command::report;
  if (name == "all") return Command::all;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::ingest: return "ingest";
    case Command::extract: return "extract";
    case Command::classify: return "classify";
    case Command::report: return "report";
    case Command::all: return "all";
  }
  return "?";
}

RunResult run(Command command, const PipelineConfig& config, std::ostream* log) {
  config.validate();
  Runner r(config, log);
  switch (command) {
    case Command::ingest: r.ingest(); break;
    case Command::extract: r.extract(); break;
    case Command::classify: r.classify(); break;
    case Command::report: r.report(); break;
    case Command::all:
      r.ingest();
      r.extract();
      r.classify();
      r.report();
      break;
  }
  r.write_run_manifest(command);
  return RunResult{r.take_artifacts()};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) return 1;
  if (dynamic_cast<const DependencyError*>(&e)) return 2;
  return 3;
}

}  // namespace venuescope
