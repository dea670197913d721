#include <sstream>

#include <gtest/gtest.h>

#include "tempdir.hpp"
#include "venuescope/error.hpp"
#include "venuescope/pipeline.hpp"

using namespace venuescope;

namespace {

const char* kConfig =
    "# sample\n"
    "dump = data/dump.tsv\n"
    "institutions = inst.tsv\n"
    "ontology = /abs/onto.tsv\n"
    "out = results\n"
    "venue.CHI = V-CHI\n"
    "venue.IJHCS = V-IJHCS, V-IJMMS\n"
    "group_thresholds = 10,5\n"
    "threads = 3\n";

PipelineConfig parse(const std::string& text) {
  std::istringstream in(text);
  return PipelineConfig::parse(in, "/base");
}

std::string field_of(const std::string& text) {
  try {
    parse(text).validate();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<valid>";
}

SyntheticSpec small_spec() {
  SyntheticSpec s;
  s.papers = 150;
  s.seed = 7;
  s.group_thresholds = {10, 5, 2, 1};
  return s;
}

PipelineConfig synthetic_config(const std::filesystem::path& data, const std::filesystem::path& out) {
  auto cfg = PipelineConfig::load(data / "config.txt");
  cfg.out = out.string();
  return cfg;
}

}  // namespace

TEST(Config, ParsesKeysAndResolvesPaths) {
  const auto c = parse(kConfig);
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.resolve(c.dump), std::filesystem::path("/base/data/dump.tsv"));
  EXPECT_EQ(c.resolve(c.ontology), std::filesystem::path("/abs/onto.tsv"));
  EXPECT_EQ(c.venues.at("IJHCS"), (std::vector<std::string>{"V-IJHCS", "V-IJMMS"}));
  EXPECT_EQ(c.report.group_thresholds, (std::vector<std::uint64_t>{10, 5}));
  EXPECT_EQ(c.threads, 3u);
  EXPECT_EQ(c.venue_names(), (std::vector<std::string>{"CHI", "IJHCS"}));
  EXPECT_DOUBLE_EQ(c.threshold, 0.94);
}

TEST(Config, SyntaxErrors) {
  EXPECT_THROW(parse("dump\n"), ConfigError);
  try {
    parse("dump = a\ndump = b\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "dump");
  }
  try {
    parse("colour = red\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "colour");
  }
  try {
    parse("threshold = high\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "threshold");
  }
  EXPECT_THROW(parse("mode = loose\n"), ConfigError);
}

TEST(Config, ValidationNamesTheField) {
  const std::string base = kConfig;
  EXPECT_EQ(field_of(base), "<valid>");
  EXPECT_EQ(field_of("institutions = i\nontology = o\nout = r\nvenue.A = x\n"), "dump");
  EXPECT_EQ(field_of(base + "threshold = 0\n"), "threshold");
  EXPECT_EQ(field_of(base + "threshold = 1.5\n"), "threshold");
  EXPECT_EQ(field_of(base + "threshold = 1\n"), "<valid>");
  EXPECT_EQ(field_of(base + "start_year = 2018\n"), "start_year");
  EXPECT_EQ(field_of("dump = d\ninstitutions = i\nontology = o\nout = r\nvenue.A = x\ngroup_thresholds = 5,10\n"),
            "group_thresholds");
  EXPECT_EQ(field_of("dump = d\ninstitutions = i\nontology = o\nout = r\nvenue.A = x\ngroup_thresholds = 5,0\n"),
            "group_thresholds");
  EXPECT_EQ(field_of("dump = d\ninstitutions = i\nontology = o\nout = r\n"), "venue");
  EXPECT_EQ(field_of(base + "venue.a/b = x\n"), "venue.a/b");
  EXPECT_EQ(field_of(base + "venue.E = ,\n"), "venue.E");
  auto c = parse(kConfig);
  c.selected_venue = "NOPE";
  try {
    c.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "venue");
  }
}

TEST(Config, CanonicalTextIgnoresOutputAndThreads) {
  auto a = parse(kConfig);
  auto b = parse(kConfig);
  b.out = "elsewhere";
  b.threads = 8;
  EXPECT_EQ(a.canonical_text(), b.canonical_text());
  b.threshold = 0.9;
  EXPECT_NE(a.canonical_text(), b.canonical_text());
  const auto text = a.canonical_text();
  EXPECT_LT(text.find("dump="), text.find("threshold="));
  EXPECT_LT(text.find("venue.CHI="), text.find("venue.IJHCS="));
  EXPECT_EQ(text.find("out="), std::string::npos);
}

TEST(Digest, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  fixture::TempDir dir;
  fixture::spit(dir / "f", "abc");
  EXPECT_EQ(sha256_file(dir / "f"), sha256_hex("abc"));
  EXPECT_THROW(sha256_file(dir / "missing"), IoError);
}

TEST(Commands, NamesRoundTrip) {
  for (const auto c : {Command::ingest, Command::extract, Command::classify, Command::report, Command::all})
    EXPECT_EQ(parse_command(command_name(c)), c);
  EXPECT_FALSE(parse_command("publish").has_value());
}

TEST(ExitCodes, ByErrorKind) {
  EXPECT_EQ(exit_code_for(ConfigError("x", "bad")), 1);
  EXPECT_EQ(exit_code_for(std::invalid_argument("bad")), 1);
  EXPECT_EQ(exit_code_for(DependencyError("p", "missing")), 2);
  EXPECT_EQ(exit_code_for(ParseError(3, "bad row")), 3);
  EXPECT_EQ(exit_code_for(IoError("disk")), 3);
  EXPECT_EQ(exit_code_for(NotFoundError("venue")), 3);
}

TEST(Synthetic, DeterministicForASeed) {
  fixture::TempDir a, b;
  write_synthetic_dataset(a.path(), small_spec());
  write_synthetic_dataset(b.path(), small_spec());
  EXPECT_EQ(fixture::tree_of(a.path()), fixture::tree_of(b.path()));
  auto other = small_spec();
  other.seed = 8;
  fixture::TempDir c;
  write_synthetic_dataset(c.path(), other);
  EXPECT_NE(fixture::slurp(a / "dump.tsv"), fixture::slurp(c / "dump.tsv"));
}

TEST(Run, DownstreamStageWithoutUpstreamOutput) {
  fixture::TempDir dir;
  write_synthetic_dataset(dir.path(), small_spec());
  const auto cfg = synthetic_config(dir.path(), dir / "out");
  EXPECT_THROW(run(Command::extract, cfg), DependencyError);
  run(Command::ingest, cfg);
  EXPECT_THROW(run(Command::classify, cfg), DependencyError);
  try {
    run(Command::report, cfg);
    FAIL();
  } catch (const DependencyError& e) {
    EXPECT_EQ(exit_code_for(e), 2);
    EXPECT_NE(e.missing().find("venues/CHI/"), std::string::npos) << e.missing();
    EXPECT_NE(std::string(e.what()).find("extract"), std::string::npos) << e.what();
  }
}

TEST(Run, StagedEqualsAllAndThreadsDoNotMatter) {
  fixture::TempDir data, staged, whole;
  write_synthetic_dataset(data.path(), small_spec());
  auto cfg = synthetic_config(data.path(), staged.path());
  cfg.threads = 1;
  for (const auto c : {Command::ingest, Command::extract, Command::classify, Command::report}) run(c, cfg);
  auto cfg_all = synthetic_config(data.path(), whole.path());
  cfg_all.threads = 4;
  const auto result = run(Command::all, cfg_all);

  auto a = fixture::tree_of(staged.path());
  auto b = fixture::tree_of(whole.path());
  // the run manifest names the command that produced it
  a.erase("run_manifest.txt");
  b.erase("run_manifest.txt");
  EXPECT_EQ(a, b);
  EXPECT_EQ(result.artifacts.size(), b.size() + 1);
  for (const auto venue : {"CHI", "IJHCS"})
    for (const auto f : report::kReportFiles)
      EXPECT_TRUE(b.count(std::string("venues/") + venue + "/reports/" + std::string(f))) << venue << "/" << f;
}

TEST(Run, StrictModeRejectsMalformedRows) {
  fixture::TempDir dir;
  write_synthetic_dataset(dir.path(), small_spec());
  auto cfg = synthetic_config(dir.path(), dir / "out");
  cfg.mode = IngestMode::strict;
  try {
    run(Command::ingest, cfg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(exit_code_for(e), 3);
  }
}

TEST(Run, ManifestRecordsInputsAndConfig) {
  fixture::TempDir data, out;
  write_synthetic_dataset(data.path(), small_spec());
  const auto cfg = synthetic_config(data.path(), out.path());
  run(Command::all, cfg);
  const auto manifest = fixture::slurp(out / "run_manifest.txt");
  EXPECT_NE(manifest.find("command=all\n"), std::string::npos);
  EXPECT_NE(manifest.find("config_sha256=" + sha256_hex(cfg.canonical_text())), std::string::npos);
  EXPECT_NE(manifest.find("dump_sha256=" + sha256_file(data / "dump.tsv")), std::string::npos);
  EXPECT_NE(manifest.find("[venue CHI]"), std::string::npos);
  EXPECT_NE(manifest.find("skipped_rows="), std::string::npos);
  EXPECT_NE(manifest.find("mean_topics_per_paper="), std::string::npos);
}
