#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

#include "internal/strings.hpp"
#include "venuescope/corpus.hpp"
#include "venuescope/error.hpp"

namespace venuescope {

namespace {

struct RowError {
  std::string message;
};

bool valid_country(std::string_view code) {
  if (code == kUnknownCountry) return true;
  return code.size() == 2 && std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::optional<std::string> optional_text(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return std::string(field);
}

std::vector<Authorship> parse_authorships(std::string_view field) {
  std::vector<Authorship> out;
  if (field.empty()) return out;
  for (auto entry : detail::split(field, ';')) {
    if (entry.empty()) continue;
    const auto parts = detail::split(entry, ',');
    if (parts.size() > 2) throw RowError{fmt::format("authorship entry '{}' has more than one ','", entry)};
    if (parts[0].empty()) throw RowError{fmt::format("authorship entry '{}' has an empty author id", entry)};
    Authorship a;
    a.author_id = std::string(parts[0]);
    if (parts.size() == 2 && !parts[1].empty()) a.institution_id = std::string(parts[1]);
    a.position = static_cast<std::uint32_t>(out.size());
    out.push_back(std::move(a));
  }
  return out;
}

std::optional<int> parse_year(std::string_view field) {
  if (field.empty()) return std::nullopt;
  const auto year = detail::parse_number<int>(field);
  if (!year) throw RowError{fmt::format("year '{}' is not an integer", field)};
  if (*year < kMinYear || *year > kMaxYear)
    throw RowError{fmt::format("year {} outside [{}, {}]", *year, kMinYear, kMaxYear)};
  return year;
}

struct ParsedRow {
  PaperRecord record;
  std::size_t self_references = 0;
};

ParsedRow parse_row(std::string_view line, const Schema& schema) {
  const auto fields = detail::split(line, '\t');
  if (fields.size() < schema.column_count())
    throw RowError{fmt::format("expected at least {} columns, found {}", schema.column_count(), fields.size())};

  auto column = [&](const std::optional<std::size_t>& idx) -> std::string_view {
    return idx ? fields[*idx] : std::string_view{};
  };

  ParsedRow row;
  auto& r = row.record;
  r.paper_id = std::string(fields[schema.paper_id]);
  if (r.paper_id.empty()) throw RowError{"empty paper_id"};
  r.year = parse_year(fields[schema.year]);
  r.venue_id = std::string(fields[schema.venue_id]);
  r.doi = optional_text(column(schema.doi));
  r.title = std::string(column(schema.title));
  r.abstract = optional_text(column(schema.abstract));
  r.keywords = optional_text(column(schema.keywords));
  r.authorships = parse_authorships(column(schema.authorships));

  std::unordered_set<std::string_view> seen;
  for (auto ref : detail::split(column(schema.references), ';')) {
    if (ref.empty()) continue;
    if (ref == r.paper_id) {
      ++row.self_references;
      continue;
    }
    if (seen.insert(ref).second) r.references.emplace_back(ref);
  }
  return row;
}

}  // namespace

Schema Schema::canonical() {
  Schema s;
  s.paper_id = 0;
  s.year = 1;
  s.venue_id = 2;
  s.doi = 3;
  s.title = 4;
  s.abstract = 5;
  s.keywords = 6;
  s.authorships = 7;
  s.references = 8;
  return s;
}

std::size_t Schema::column_count() const {
  std::size_t n = std::max({paper_id, year, venue_id}) + 1;
  for (const auto& opt : {doi, title, abstract, keywords, authorships, references})
    if (opt) n = std::max(n, *opt + 1);
  return n;
}

Schema Schema::parse(std::istream& in) {
  Schema s;
  std::optional<std::size_t> paper_id, year, venue_id;
  std::set<std::size_t> used;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("schema", fmt::format("line {}: expected key=value", lineno));
    const auto key = std::string(detail::trim(std::string_view(line).substr(0, eq)));
    const auto value = detail::trim(std::string_view(line).substr(eq + 1));
    if (key == "header") {
      if (value == "true" || value == "1") s.header = true;
      else if (value == "false" || value == "0") s.header = false;
      else throw ConfigError("schema.header", fmt::format("expected true/false, got '{}'", value));
      continue;
    }
    const auto idx = detail::parse_number<std::size_t>(value);
    if (!idx) throw ConfigError("schema." + key, fmt::format("column index '{}' is not a non-negative integer", value));
    if (!used.insert(*idx).second) throw ConfigError("schema." + key, fmt::format("column {} mapped twice", *idx));
    if (key == "paper_id") paper_id = idx;
    else if (key == "year") year = idx;
    else if (key == "venue_id") venue_id = idx;
    else if (key == "doi") s.doi = idx;
    else if (key == "title") s.title = idx;
    else if (key == "abstract") s.abstract = idx;
    else if (key == "keywords") s.keywords = idx;
    else if (key == "authorships") s.authorships = idx;
    else if (key == "references") s.references = idx;
    else throw ConfigError("schema." + key, "unknown column key");
  }
  if (!paper_id) throw ConfigError("schema.paper_id", "required column missing");
  if (!year) throw ConfigError("schema.year", "required column missing");
  if (!venue_id) throw ConfigError("schema.venue_id", "required column missing");
  s.paper_id = *paper_id;
  s.year = *year;
  s.venue_id = *venue_id;
  return s;
}

Schema Schema::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open schema file {}", path.string()));
  return parse(in);
}

std::string Schema::to_text() const {
  std::string out = fmt::format("paper_id={}\nyear={}\nvenue_id={}\n", paper_id, year, venue_id);
  auto put = [&](const char* key, const std::optional<std::size_t>& idx) {
    if (idx) out += fmt::format("{}={}\n", key, *idx);
  };
  put("doi", doi);
  put("title", title);
  put("abstract", abstract);
  put("keywords", keywords);
  put("authorships", authorships);
  put("references", references);
  if (header) out += "header=true\n";
  return out;
}

InstitutionTable load_institutions(std::istream& in, IngestMode mode) {
  InstitutionTable table;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::chomp(line);
    if (detail::is_comment_or_blank(text)) continue;
    const auto fields = detail::split(text, '\t');
    std::string problem;
    if (fields.size() < 3) problem = fmt::format("expected 3 columns, found {}", fields.size());
    else if (fields[0].empty()) problem = "empty institution_id";
    else if (!fields[2].empty() && !valid_country(fields[2]))
      problem = fmt::format("country code '{}' is not two uppercase letters", fields[2]);
    else if (seen.count(std::string(fields[0]))) problem = fmt::format("duplicate institution_id '{}'", fields[0]);
    if (!problem.empty()) {
      if (mode == IngestMode::strict) throw ParseError(lineno, problem);
      ++table.skipped;
      continue;
    }
    Institution inst{std::string(fields[0]), std::string(fields[1]),
                     fields[2].empty() ? std::string(kUnknownCountry) : std::string(fields[2])};
    seen.insert(inst.institution_id);
    table.rows.push_back(std::move(inst));
  }
  if (in.bad()) throw IoError("read failure in institution table");
  return table;
}

InstitutionTable load_institutions_file(const std::filesystem::path& path, IngestMode mode) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open institution table {}", path.string()));
  return load_institutions(in, mode);
}

CorpusStore ingest(std::istream& source, const Schema& schema, IngestMode mode, InstitutionTable institutions) {
  if (!source) throw IoError("paper source is not readable");
  std::vector<PaperRecord> papers;
  IngestStats stats;
  stats.institutions_skipped = institutions.skipped;
  std::unordered_set<std::string> ids;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(source, line)) {
    ++lineno;
    if (lineno == 1 && schema.header) continue;
    const auto text = detail::chomp(line);
    if (text.empty()) continue;
    ++stats.rows;
    try {
      auto row = parse_row(text, schema);
      if (ids.count(row.record.paper_id)) {
        if (mode == IngestMode::strict)
          throw ParseError(lineno, fmt::format("duplicate paper_id '{}'", row.record.paper_id));
        ++stats.duplicates;
        continue;
      }
      ids.insert(row.record.paper_id);
      stats.self_references += row.self_references;
      stats.authorships += row.record.authorships.size();
      papers.push_back(std::move(row.record));
    } catch (const RowError& e) {
      if (mode == IngestMode::strict) throw ParseError(lineno, e.message);
      ++stats.skipped;
    }
  }
  if (source.bad()) throw IoError("read failure in paper source");
  return CorpusStore(std::move(papers), std::move(institutions.rows), stats);
}

CorpusStore ingest_file(const std::filesystem::path& dump, const Schema& schema, IngestMode mode,
                        InstitutionTable institutions) {
  std::ifstream in(dump);
  if (!in) throw IoError(fmt::format("cannot open paper dump {}", dump.string()));
  return ingest(in, schema, mode, std::move(institutions));
}

CorpusStore::CorpusStore(std::vector<PaperRecord> papers, std::vector<Institution> institutions, IngestStats stats)
    : papers_(std::move(papers)), institutions_(std::move(institutions)), stats_(stats) {
  paper_index_.reserve(papers_.size());
  for (std::uint32_t i = 0; i < papers_.size(); ++i) {
    if (!paper_index_.emplace(papers_[i].paper_id, i).second)
      throw std::invalid_argument("duplicate paper_id in store: " + papers_[i].paper_id);
    ++venues_[papers_[i].venue_id];
  }
  for (std::uint32_t i = 0; i < institutions_.size(); ++i) {
    if (institutions_[i].country_code.empty()) institutions_[i].country_code = kUnknownCountry;
    if (!institution_index_.emplace(institutions_[i].institution_id, i).second)
      throw std::invalid_argument("duplicate institution_id in store: " + institutions_[i].institution_id);
  }
}

std::optional<std::uint32_t> CorpusStore::index_of(std::string_view paper_id) const {
  const auto it = paper_index_.find(paper_id);
  if (it == paper_index_.end()) return std::nullopt;
  return it->second;
}

const PaperRecord* CorpusStore::find(std::string_view paper_id) const {
  const auto idx = index_of(paper_id);
  return idx ? &papers_[*idx] : nullptr;
}

const Institution* CorpusStore::institution(std::string_view institution_id) const {
  const auto it = institution_index_.find(institution_id);
  return it == institution_index_.end() ? nullptr : &institutions_[it->second];
}

bool CorpusStore::has_venue(std::string_view venue_id) const { return venues_.find(venue_id) != venues_.end(); }

std::string_view resolve_country(const Authorship& authorship, const CorpusStore& store) {
  if (!authorship.institution_id) return kUnknownCountry;
  const auto* inst = store.institution(*authorship.institution_id);
  if (!inst || inst->country_code.empty()) return kUnknownCountry;
  return inst->country_code;
}

std::vector<Contribution> contributions(const PaperRecord& paper, const CorpusStore& store) {
  std::vector<Contribution> out;
  out.reserve(paper.authorships.size());
  for (const auto& a : paper.authorships)
    out.push_back(Contribution{a.author_id, a.institution_id, std::string(resolve_country(a, store)), a.position});
  return out;
}

}  // namespace venuescope
