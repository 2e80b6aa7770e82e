// Copyright 2026 The ncpara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "ncpara/formats.hpp"
#include "ncpara/gold_pipeline.hpp"

using namespace ncpara;

TEST_CASE("parse_raw_annotations") {
  std::istringstream in(
      "# comment\n"
      "air\tfilter\tfilter for air\tw17\n"
      "\n"
      "air\tfilter\tFilter of air.\n"
      "work\tarea\tarea of work\tw2\n");
  const auto records = parse_raw_annotations(in, "raw.tsv");
  REQUIRE(records.size() == 3);
  CHECK(records[0].compound == Compound{"air", "filter"});
  CHECK(records[0].paraphrase == "filter for air");
  CHECK(records[0].annotator == "w17");
  CHECK(records[0].line == 2);
  CHECK(records[1].annotator == std::nullopt);
  CHECK(records[1].paraphrase == "Filter of air.");  // raw surface kept
  CHECK(records[2].line == 5);
}

TEST_CASE("parse_raw_annotations tolerates BOM and CRLF") {
  std::istringstream in("\xEF\xBB\xBF" "air\tfilter\tfilter for air\r\n");
  const auto records = parse_raw_annotations(in, "raw.tsv");
  REQUIRE(records.size() == 1);
  CHECK(records[0].compound == Compound{"air", "filter"});
  CHECK(records[0].paraphrase == "filter for air");
}

TEST_CASE("parse_raw_annotations rejects malformed lines") {
  std::istringstream two_fields("air\tfilter\n");
  CHECK_THROWS_WITH_AS(parse_raw_annotations(two_fields, "raw.tsv"),
                       doctest::Contains("raw.tsv:1"), ParseError);

  std::istringstream empty_paraphrase("air\tfilter\t \n");
  CHECK_THROWS_WITH_AS(parse_raw_annotations(empty_paraphrase, "raw.tsv"),
                       doctest::Contains("paraphrase"), ParseError);

  std::istringstream two_words("air x\tfilter\tfilter for air\n");
  CHECK_THROWS_WITH_AS(parse_raw_annotations(two_words, "raw.tsv"),
                       doctest::Contains("single word"), ParseError);
}

TEST_CASE("parse_gold_file") {
  std::istringstream in(
      "air\tfilter\t0\t3\tfilter for air\n"
      "air\tfilter\t1\t2\tfilter of air\n"
      "work\tarea\t0\t1\tarea of work\n");
  const auto gold = parse_gold_file(in, "gold.tsv");
  REQUIRE(gold.size() == 2);
  CHECK(gold[0].compound == Compound{"air", "filter"});
  REQUIRE(gold[0].entries.size() == 2);
  CHECK(gold[0].entries[0].rank == 0);
  CHECK(gold[0].entries[0].frequency == 3);
  CHECK(gold[0].entries[0].tokens == TokenSeq{"filter", "for", "air"});
  CHECK(gold[1].entries[0].frequency == 1);
}

TEST_CASE("parse_gold_file enforces rank structure") {
  std::istringstream gap(
      "air\tfilter\t0\t3\tfilter for air\n"
      "air\tfilter\t2\t1\tfilter of air\n");
  CHECK_THROWS_WITH_AS(parse_gold_file(gap, "gold.tsv"),
                       doctest::Contains("consecutive"), ParseError);

  std::istringstream rising(
      "air\tfilter\t0\t2\tfilter for air\n"
      "air\tfilter\t1\t2\tfilter of air\n");
  CHECK_THROWS_WITH_AS(parse_gold_file(rising, "gold.tsv"),
                       doctest::Contains("frequency"), ParseError);

  std::istringstream bad_rank("air\tfilter\t-1\t2\tfilter for air\n");
  CHECK_THROWS_WITH_AS(parse_gold_file(bad_rank, "gold.tsv"),
                       doctest::Contains("rank"), ParseError);

  std::istringstream few("air\tfilter\t0\t3\n");
  CHECK_THROWS_WITH_AS(parse_gold_file(few, "gold.tsv"),
                       doctest::Contains("5 tab-separated"), ParseError);
}

TEST_CASE("parse_system_output") {
  std::istringstream in(
      "air\tfilter\t2\tfilter of air\n"
      "air\tfilter\t1\tfilter for air\n"
      "work\tarea\t1\tarea of work\n");
  const auto submission = parse_system_output(in, "sys", "sys.tsv");
  CHECK(submission.name == "sys");
  REQUIRE(submission.entries.size() == 2);
  // positions define the order regardless of line order
  CHECK(submission.entries[0].paraphrases ==
        std::vector<std::string>{"filter for air", "filter of air"});
}

TEST_CASE("parse_system_output enforces dense positions") {
  std::istringstream duplicate(
      "air\tfilter\t1\tfilter for air\n"
      "air\tfilter\t1\tfilter of air\n");
  CHECK_THROWS_WITH_AS(parse_system_output(duplicate, "sys", "sys.tsv"),
                       doctest::Contains("duplicate position"), ParseError);

  std::istringstream gap(
      "air\tfilter\t1\tfilter for air\n"
      "air\tfilter\t3\tfilter of air\n");
  CHECK_THROWS_WITH_AS(parse_system_output(gap, "sys", "sys.tsv"),
                       doctest::Contains("non-dense position"), ParseError);

  std::istringstream zero("air\tfilter\t0\tfilter for air\n");
  CHECK_THROWS_WITH_AS(parse_system_output(zero, "sys", "sys.tsv"),
                       doctest::Contains("position"), ParseError);
}

TEST_CASE("gold files round-trip through write and parse") {
  std::vector<AnnotationRecord> records;
  const auto add = [&](const char* mod, const char* head, const char* text,
                       int times) {
    for (int i = 0; i < times; ++i) {
      AnnotationRecord r;
      r.compound = {mod, head};
      r.paraphrase = text;
      records.push_back(std::move(r));
    }
  };
  add("air", "filter", "filter for air", 3);
  add("air", "filter", "filter of air", 2);
  add("air", "filter", "a filter for the air", 1);
  add("work", "area", "area where work is done", 2);
  add("work", "area", "area of work", 2);
  add("body", "heat", "heat of the body", 4);

  const auto compiled = compile_gold(records).gold;
  std::ostringstream out;
  write_gold_file(out, compiled);

  std::istringstream in(out.str());
  const auto parsed = parse_gold_file(in, "roundtrip.tsv");
  CHECK(parsed == compiled);

  // writing the parsed lists again reproduces the bytes
  std::ostringstream again;
  write_gold_file(again, parsed);
  CHECK(again.str() == out.str());
}

TEST_CASE("gold writer output is sorted and stable") {
  std::vector<AnnotationRecord> records;
  AnnotationRecord r;
  r.compound = {"work", "area"};
  r.paraphrase = "area of work";
  records.push_back(r);
  r.compound = {"air", "filter"};
  r.paraphrase = "filter for air";
  records.push_back(r);

  std::ostringstream out;
  write_gold_file(out, compile_gold(records).gold);
  CHECK(out.str() ==
        "air\tfilter\t0\t1\tfilter for air\n"
        "work\tarea\t0\t1\tarea of work\n");
}

TEST_CASE("system writer emits dense 1-based positions") {
  SystemSubmission submission;
  submission.name = "baseline";
  submission.entries.push_back(
      {{"air", "filter"}, {"filter of air", "filter in air"}});
  std::ostringstream out;
  write_system_file(out, submission);
  CHECK(out.str() ==
        "air\tfilter\t1\tfilter of air\n"
        "air\tfilter\t2\tfilter in air\n");

  std::istringstream in(out.str());
  const auto parsed = parse_system_output(in, "baseline", "");
  REQUIRE(parsed.entries.size() == 1);
  CHECK(parsed.entries[0].paraphrases == submission.entries[0].paraphrases);
}

TEST_CASE("random gold lists survive the round trip") {
  std::mt19937 rng(4096);
  const std::vector<std::string> mods{"air", "work", "body", "colon", "ice"};
  const std::vector<std::string> heads{"filter", "area", "heat", "cancer"};
  const std::vector<std::string> links{"for", "of", "that cleans", "used for",
                                       "about", "from"};
  for (int round = 0; round < 30; ++round) {
    std::vector<AnnotationRecord> records;
    const std::size_t compounds = 1 + rng() % 4;
    for (std::size_t c = 0; c < compounds; ++c) {
      const Compound compound{mods[rng() % mods.size()],
                              heads[rng() % heads.size()]};
      const std::size_t kinds = 1 + rng() % 4;
      for (std::size_t k = 0; k < kinds; ++k) {
        const std::string text =
            compound.head + " " + links[rng() % links.size()] + " " +
            compound.modifier;
        const int times = 1 + int(rng() % 3);
        for (int i = 0; i < times; ++i) {
          AnnotationRecord r;
          r.compound = compound;
          r.paraphrase = text;
          records.push_back(std::move(r));
        }
      }
    }
    const auto compiled = compile_gold(records).gold;
    std::ostringstream out;
    write_gold_file(out, compiled);
    std::istringstream in(out.str());
    CHECK(parse_gold_file(in, "") == compiled);
  }
}
