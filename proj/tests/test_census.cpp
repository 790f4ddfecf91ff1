#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "circstab/census.hpp"
#include "test_support.hpp"

using namespace circstab;
namespace fs = std::filesystem;

namespace {

// Classes of nontrivially unstable circulants of order n, straight from the
// definition: every symmetric set, grouped by canonical certificate.
std::set<std::vector<std::uint8_t>> oracle_classes(int n) {
  std::set<std::vector<std::uint8_t>> out;
  testing_support::for_each_symmetric_set(n, [&](const ConnectionSet& s) {
    const CirculantGraph x{s};
    if (stability_verdict(x, {.annotate = false}).verdict == Verdict::nontrivially_unstable) {
      out.insert(canonical_certificate(x.to_colored()));
    }
  });
  return out;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("circstab-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> read_lines(const fs::path& file) {
  std::ifstream in(file);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST(Census, Examples) {
  EXPECT_TRUE(enumerate_order(6).empty());
  const auto r8 = enumerate_order(8);
  const ConnectionSet want = canonical_multiplier_set(ConnectionSet(8, {1, 2, 6, 7}));
  EXPECT_TRUE(std::any_of(r8.begin(), r8.end(), [&](const CensusRecord& r) { return r.canonical_set == want; }));
  for (const CensusRecord& r : r8) EXPECT_EQ(r.verdict, Verdict::nontrivially_unstable);
}

TEST(Census, OrderTwentyFourExceptions) {
  const auto recs = enumerate_order(24);
  std::set<std::vector<std::uint8_t>> ours;
  for (const CensusRecord& r : recs) {
    if (r.no_wilson_type()) ours.insert(r.certificate);
  }
  std::set<std::vector<std::uint8_t>> published;
  for (const ConnectionSet& s : known_order24_exceptions()) {
    published.insert(canonical_certificate(CirculantGraph{s}.to_colored()));
  }
  EXPECT_EQ(ours.size(), 6u);
  EXPECT_EQ(ours, published);
}

TEST(Census, MatchesDefinitionOracle) {
  for (int n = 1; n <= 20; ++n) {
    const auto recs = enumerate_order(n);
    std::set<std::vector<std::uint8_t>> certs;
    for (const CensusRecord& r : recs) certs.insert(r.certificate);
    EXPECT_EQ(certs.size(), recs.size()) << n;
    EXPECT_EQ(certs, oracle_classes(n)) << n;
  }
}

TEST(Census, RecordsAreCanonicalAndDistinct) {
  std::mt19937_64 rng(7);
  for (int n : {12, 16, 18, 20, 24, 28}) {
    const auto recs = enumerate_order(n);
    std::set<std::vector<std::uint8_t>> certs;
    const std::vector<int> us = units(n).values();
    for (const CensusRecord& r : recs) {
      EXPECT_TRUE(certs.insert(r.certificate).second) << r.canonical_set.to_literal();
      EXPECT_EQ(canonical_certificate(CirculantGraph{r.canonical_set}.to_colored()), r.certificate);
      EXPECT_EQ(canonical_multiplier_set(r.canonical_set), r.canonical_set);
      for (int trial = 0; trial < 10; ++trial) {
        const int m = us[rng() % us.size()];
        const ConnectionSet member(scale_set(r.canonical_set.members(), m));
        EXPECT_EQ(canonical_multiplier_set(member), r.canonical_set);
        EXPECT_EQ(canonical_certificate(CirculantGraph{member}.to_colored()), r.certificate);
      }
    }
  }
}

TEST(Census, CoverageUpToTwentyFour) {
  const CensusSummary s = run_census(1, 24);
  for (const CensusRecord& r : s.records) {
    EXPECT_TRUE(r.flags.any()) << r.canonical_set.to_literal();
    EXPECT_FALSE(r.flags.unexplained);
  }
}

TEST(Census, SummaryTotalsEqualRecordCounts) {
  const CensusSummary s = run_census(1, 24);
  EXPECT_EQ(s.total(), static_cast<int>(s.records.size()));
  for (const OrderSummary& o : s.orders) {
    const auto count = std::count_if(s.records.begin(), s.records.end(), [&](const CensusRecord& r) { return r.n == o.n; });
    EXPECT_EQ(o.nontrivially_unstable, count) << o.n;
    EXPECT_EQ(o.no_wilson_type, static_cast<int>(o.no_wilson_sets.size()));
  }
  EXPECT_TRUE(std::is_sorted(s.records.begin(), s.records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::pair(a.n, a.canonical_set.bits()) < std::pair(b.n, b.canonical_set.bits());
  }));
  EXPECT_EQ(s.order(24)->no_wilson_type, 6);
  EXPECT_EQ(s.order(25), nullptr);
}

TEST(Census, DeterministicAcrossWorkerCounts) {
  const CensusSummary one = run_census(20, 30, {.workers = 1});
  const CensusSummary three = run_census(20, 30, {.workers = 3});
  EXPECT_EQ(one.records, three.records);
  EXPECT_EQ(summary_to_csv(one), summary_to_csv(three));
  EXPECT_EQ(summary_to_json(one), summary_to_json(three));
}

TEST(Census, RejectsBadRanges) {
  EXPECT_THROW(run_census(39, 39), DomainError);
  EXPECT_THROW(run_census(5, 4), DomainError);
  EXPECT_THROW(run_census(0, 4), DomainError);
  EXPECT_THROW(run_census(60, 65, {.extended = true}), CapExceeded);
  EXPECT_THROW(enumerate_order(65), CapExceeded);
}

TEST(CensusCache, RecordLineRoundTrip) {
  for (const CensusRecord& r : enumerate_order(16)) {
    const std::string line = record_to_cache_line(r);
    EXPECT_EQ(record_from_cache_line(line), r);
    EXPECT_EQ(record_to_cache_line(record_from_cache_line(line)), line);
  }
  EXPECT_THROW(record_from_cache_line("8;1,2,6,7;00;stable"), ParseError);
  EXPECT_THROW(record_from_cache_line("8;1,2;00;stable;"), ParseError);
  EXPECT_THROW(record_from_cache_line("8;1,2,6,7;0;stable;"), ParseError);
  EXPECT_THROW(record_from_cache_line("8;1,2,6,7;00;wobbly;"), ParseError);
  EXPECT_THROW(record_from_cache_line("8;1,2,6,7;00;stable;C9"), ParseError);
  EXPECT_EQ(flags_from_csv(""), ConditionFlags{});
  ConditionFlags f;
  f.c4 = true;
  f.xe_general = true;
  f.aux_loops = true;
  EXPECT_EQ(flags_to_csv(f), "C4,xe-general,aux-loops");
  EXPECT_EQ(flags_from_csv(flags_to_csv(f)), f);
}

TEST(CensusCache, ResumesAfterTruncation) {
  const fs::path dir = fresh_dir("resume");
  const auto plain = enumerate_order(30);
  const auto cached = enumerate_order(30, {.workers = 2, .cache_dir = dir});
  EXPECT_EQ(plain, cached);
  const fs::path file = dir / "order-30.txt";
  auto lines = read_lines(file);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines.back(), "#complete");

  // Cut the file in the middle of a chunk and append junk.
  std::size_t cut = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind("#done", 0) == 0) cut = i;
    if (i > lines.size() / 2 && cut != 0) break;
  }
  lines.resize(cut + 1);
  lines.push_back("30;1,2,28,29;ab;nontrivially");
  {
    std::ofstream out(file, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
  }
  std::size_t resumed_calls = 0;
  CensusOptions opts{.cache_dir = dir};
  opts.progress = [&](int, std::size_t, std::size_t) { ++resumed_calls; };
  EXPECT_EQ(enumerate_order(30, opts), plain);
  EXPECT_GT(resumed_calls, 0u);
  EXPECT_EQ(read_lines(file).back(), "#complete");

  // A complete cache is used as is.
  resumed_calls = 0;
  EXPECT_EQ(enumerate_order(30, opts), plain);
  EXPECT_EQ(resumed_calls, 0u);
  fs::remove_all(dir);
}

TEST(CensusCache, ForeignHeaderStartsAfresh) {
  const fs::path dir = fresh_dir("foreign");
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "order-12.txt");
    out << "#circstab-census n=12 chunks=99 low=1\n12;1,11;00;stable;\n#done 0 1\n#complete\n";
  }
  EXPECT_EQ(enumerate_order(12, {.cache_dir = dir}), enumerate_order(12));
  fs::remove_all(dir);
}

TEST(CensusCache, UnwritableDirectoryIsAnIoError) {
  const fs::path dir = fresh_dir("blocked");
  { std::ofstream(dir.string()) << "x"; }
  EXPECT_THROW(enumerate_order(10, {.cache_dir = dir / "sub"}), IoError);
  fs::remove(dir);
}

TEST(Comparison, ReportsMatchesAndReferences) {
  const CensusSummary s = run_census(1, 24);
  const PaperComparison cmp = compare_to_paper(s);
  EXPECT_TRUE(cmp.required_match()) << cmp.to_text();
  const std::string text = cmp.to_text();
  EXPECT_NE(text.find("order 24 exceptions up to isomorphism"), std::string::npos);
  EXPECT_NE(text.find("no reference"), std::string::npos);
  EXPECT_EQ(text.find("MISMATCH"), std::string::npos);

  CensusSummary broken = s;
  for (OrderSummary& o : broken.orders) {
    if (o.n == 12) o.no_wilson_type = 1;
  }
  EXPECT_FALSE(compare_to_paper(broken).required_match());
}

TEST(Comparison, TotalRowCarriesKnownDiscrepancy) {
  CensusSummary fake;
  fake.min_n = 1;
  fake.max_n = 38;
  for (int n = 1; n <= 38; ++n) fake.orders.push_back(OrderSummary{.n = n});
  fake.orders[35].nontrivially_unstable = 3576;
  const PaperComparison cmp = compare_to_paper(fake);
  const auto row = std::find_if(cmp.rows.begin(), cmp.rows.end(),
                                [](const ComparisonRow& r) { return r.item == "total orders 1-38"; });
  ASSERT_NE(row, cmp.rows.end());
  EXPECT_TRUE(row->matches);
  EXPECT_NE(row->note.find("3274"), std::string::npos);
}

TEST(Export, CsvAndJson) {
  const CensusSummary s = run_census(8, 10);
  EXPECT_EQ(summary_to_csv(s),
            "order,nontrivially_unstable,c1,c2,c3,c4,general_hk,iso_translate,xe,no_wilson_type\n"
            "8,2," + std::to_string(s.order(8)->c1) + ',' + std::to_string(s.order(8)->c2) + ',' +
                std::to_string(s.order(8)->c3) + ',' + std::to_string(s.order(8)->c4) + ',' +
                std::to_string(s.order(8)->general_hk) + ',' + std::to_string(s.order(8)->iso_translate) + ',' +
                std::to_string(s.order(8)->xe) + ",0\n9,0,0,0,0,0,0,0,0,0\n10,1,0,0,0,1,0,1,0,0\n");
  const std::string json = summary_to_json(s);
  EXPECT_NE(json.find("\"totalNontriviallyUnstable\": 3"), std::string::npos);
}
