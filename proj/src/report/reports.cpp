#include <fstream>
#include <functional>
#include <set>

#include <fmt/format.h>

#include "venuescope/error.hpp"
#include "venuescope/report.hpp"

namespace venuescope::report {

namespace {

void institutions_csv(std::ostream& out, const VenueCorpus& corpus) {
  out << "institution_id,name,country_code,contributions\n";
  for (const auto table = institution_ranking(corpus, Partition::accepted); const auto& [id, n] : table.entries()) {
    const auto* inst = corpus.store().institution(id);
    out << fmt::format("{},{},{},{}\n", csv_field(id), csv_field(inst ? inst->name : ""),
                       inst ? inst->country_code : std::string(kUnknownCountry), n);
  }
}

void countries_csv(std::ostream& out, const VenueCorpus& corpus) {
  out << "partition,country_code,contributions\n";
  for (const auto p : {Partition::accepted, Partition::cited, Partition::citing})
    for (const auto table = country_distribution(corpus, p); const auto& [country, n] : table.entries())
      out << fmt::format("{},{},{}\n", partition_name(p), csv_field(country), n);
}

void debit_csv(std::ostream& out, const VenueCorpus& corpus) {
  out << "country_code,citing_contributions,cited_contributions,knowledge_debit\n";
  for (const auto& e : knowledge_debit(corpus))
    out << fmt::format("{},{},{},{}\n", csv_field(e.country_code), e.citing_contribs, e.cited_contribs,
                       e.debit ? format_real(*e.debit) : std::string("never_cited"));
}

void stability_csv(std::ostream& out, const VenueCorpus& corpus) {
  out << "year,next_year,spearman_rho\n";
  const auto yearly = yearly_country_counts(corpus);
  if (yearly.size() < 2) return;
  for (const auto series = ranking_stability(yearly); const auto& p : series.points)
    out << fmt::format("{},{},{}\n", p.year, p.next_year, p.rho ? format_real(*p.rho) : std::string());
}

void first_author_csv(std::ostream& out, const VenueCorpus& corpus) {
  out << "scope,first_author_institutions,never_first_institutions,total_institutions,never_first_pct\n";
  const auto trends = first_author_institution_trends(corpus);
  auto row = [&](const FirstAuthorRow& r) {
    out << fmt::format("{},{},{},{},{}\n", r.year ? std::to_string(*r.year) : std::string("all"),
                       r.first_author_institutions, r.never_first_institutions, r.total_institutions,
                       format_real(r.never_first_pct()));
  };
  for (const auto& r : trends.per_year) row(r);
  row(trends.corpus_wide);
}

void topic_years_csv(std::ostream& out, const TopicYearCounts& counts) {
  out << "topic_id,year,papers\n";
  for (const auto& [topic, years] : counts)
    for (const auto& [year, n] : years) out << fmt::format("{},{},{}\n", csv_field(topic), year, n);
}

void trends_csv(std::ostream& out, const TopicYearCounts& counts, const TopicOntology& ontology,
                const ReportOptions& opts) {
  out << fmt::format("band_min,band_max,rank,topic_id,label,count_{},count_{},ratio\n", opts.start_year, opts.end_year);
  const auto bands = topic_trend_analysis(counts, opts.start_year, opts.end_year, opts.group_thresholds, &ontology);
  for (const auto& band : bands) {
    std::size_t rank = 0;
    for (const auto& t : band.topics)
      out << fmt::format("{},{},{},{},{},{},{},{}\n", band.min_count,
                         band.max_count ? std::to_string(*band.max_count) : std::string(), ++rank,
                         csv_field(t.topic_id), csv_field(t.label), t.start_count, t.end_count,
                         t.infinite_growth() ? std::string("inf") : format_real(t.ratio()));
  }
}

void topic_countries_csv(std::ostream& out, const VenueCorpus& corpus,
                         const std::map<std::string, TopicAnnotation>& annotations, const TopicOntology& ontology) {
  out << "topic_id,country_code,contributions\n";
  std::set<TopicId> topics;
  for (const auto i : corpus.accepted())
    if (const auto it = annotations.find(corpus.paper(i).paper_id); it != annotations.end())
      topics.insert(it->second.all_topics.begin(), it->second.all_topics.end());
  for (const auto& topic : topics) {
    if (!ontology.contains(topic)) continue;
    for (const auto table = topic_country_distribution(corpus, annotations, ontology, topic);
         const auto& [country, n] : table.entries())
      out << fmt::format("{},{},{}\n", csv_field(topic), csv_field(country), n);
  }
}

}  // namespace

std::vector<std::string> write_reports(const std::filesystem::path& dir, const VenueCorpus& corpus,
                                       const std::map<std::string, TopicAnnotation>& annotations,
                                       const TopicOntology& ontology, const ReportOptions& opts) {
  std::vector<std::string> completed;
  auto emit = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
    const auto path = dir / name;
    try {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot create " + path.string());
      body(out);
      out.flush();
      if (!out) throw IoError("write failure on " + path.string());
    } catch (const std::exception& e) {
      throw ReportError(fmt::format("report {} failed: {}", name, e.what()), completed);
    }
    completed.push_back(name);
  };

  std::error_code ec;
  std::filesystem::create_directories(dir / "heatmaps", ec);
  if (ec) throw ReportError("cannot create report directory " + dir.string() + ": " + ec.message(), completed);

  const auto top_k = opts.top_k;
  const auto cited_matrix = venue_year_matrix(corpus, Direction::cited, top_k);
  const auto citing_matrix = venue_year_matrix(corpus, Direction::citing, top_k);
  const auto memory = reference_memory_matrix(corpus);
  const auto topic_counts = topic_year_counts(corpus, annotations);

  emit("institutions.csv", [&](std::ostream& o) { institutions_csv(o, corpus); });
  emit("venues_cited.csv", [&](std::ostream& o) {
    write_count_table(o, venue_citation_table(corpus, Direction::cited, top_k), "venue_id", "references");
  });
  emit("venues_citing.csv", [&](std::ostream& o) {
    write_count_table(o, venue_citation_table(corpus, Direction::citing, top_k), "venue_id", "citing_papers");
  });
  emit("venues_cited_by_year.csv", [&](std::ostream& o) { write_year_matrix(o, cited_matrix, "venue_id", "references"); });
  emit("venues_citing_by_year.csv",
       [&](std::ostream& o) { write_year_matrix(o, citing_matrix, "venue_id", "citing_papers"); });
  emit("reference_memory.csv", [&](std::ostream& o) { write_year_matrix(o, memory, "citing_year", "references"); });
  emit("countries.csv", [&](std::ostream& o) { countries_csv(o, corpus); });
  emit("solo_countries.csv", [&](std::ostream& o) {
    write_count_table(o, solo_country_papers(corpus, opts.min_solo_papers), "country_code", "solo_papers");
  });
  emit("knowledge_debit.csv", [&](std::ostream& o) { debit_csv(o, corpus); });
  emit("ranking_stability.csv", [&](std::ostream& o) { stability_csv(o, corpus); });
  emit("first_author_institutions.csv", [&](std::ostream& o) { first_author_csv(o, corpus); });
  emit("topic_years.csv", [&](std::ostream& o) { topic_years_csv(o, topic_counts); });
  emit("topic_trends.csv", [&](std::ostream& o) { trends_csv(o, topic_counts, ontology, opts); });
  emit("topic_countries.csv", [&](std::ostream& o) { topic_countries_csv(o, corpus, annotations, ontology); });

  const std::pair<std::string_view, const YearMatrix*> heatmaps[] = {
      {kHeatmaps[0], &cited_matrix}, {kHeatmaps[1], &citing_matrix}, {kHeatmaps[2], &memory}};
  for (const auto& [name, matrix] : heatmaps) {
    const std::string base = fmt::format("heatmaps/{}", name);
    emit(base + ".svg", [&](std::ostream& o) { write_heatmap_svg(o, *matrix, name); });
    emit(base + ".grid.csv",
         [&](std::ostream& o) { write_year_grid(o, *matrix, name == "reference_memory" ? "citing_year" : "venue_id"); });
  }
  return completed;
}

}  // namespace venuescope::report
