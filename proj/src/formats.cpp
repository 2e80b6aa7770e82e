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

#include "ncpara/formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include "ncpara/gold_pipeline.hpp"
#include "ncpara/text_norm.hpp"

namespace ncpara {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Strips a trailing \r so CRLF input parses, and a leading UTF-8 BOM on the
// first line; content is otherwise untouched.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

std::string where(const std::string& filename) {
  return filename.empty() ? "input" : filename;
}

// Compound constituents must be single words; they are case-folded here so
// lookups are insensitive to how the file spells them.
std::string parse_noun(const std::string& field, const std::string& filename,
                       std::size_t lineno, const char* column) {
  const TokenSeq tokens = tokenize_lenient(field);
  if (tokens.size() != 1) {
    throw ParseError(filename, lineno,
                     std::string(column) + ": expected a single word, got \"" +
                         field + "\"");
  }
  return tokens.front();
}

long parse_integer(const std::string& field, long min_value,
                   const std::string& filename, std::size_t lineno,
                   const char* column) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      value < min_value) {
    throw ParseError(filename, lineno,
                     std::string(column) + ": expected an integer >= " +
                         std::to_string(min_value) + ", got \"" + field + "\"");
  }
  return value;
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

ParseError::ParseError(std::string file, std::size_t line,
                       const std::string& message)
    : std::runtime_error(where(file) +
                         (line > 0 ? ":" + std::to_string(line) : "") + ": " +
                         message),
      file_(std::move(file)),
      line_(line) {}

std::vector<AnnotationRecord> parse_raw_annotations(std::istream& in,
                                                    const std::string& filename) {
  std::vector<AnnotationRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(filename, lineno,
                       "expected 3 or 4 tab-separated fields (modifier, head, "
                       "paraphrase[, annotator]), got " +
                           std::to_string(fields.size()));
    }
    AnnotationRecord record;
    record.compound.modifier =
        parse_noun(fields[0], filename, lineno, "column 1 (modifier)");
    record.compound.head =
        parse_noun(fields[1], filename, lineno, "column 2 (head)");
    record.paraphrase = trimmed(fields[2]);
    if (record.paraphrase.empty()) {
      throw ParseError(filename, lineno, "column 3 (paraphrase): empty field");
    }
    if (fields.size() == 4 && !fields[3].empty()) record.annotator = fields[3];
    record.line = lineno;
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<GoldList> parse_gold_file(std::istream& in,
                                      const std::string& filename) {
  struct Row {
    int rank;
    int frequency;
    TokenSeq tokens;
    std::size_t line;
  };
  std::map<Compound, std::vector<Row>> rows;
  std::vector<Compound> order;  // first-appearance order

  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 5) {
      throw ParseError(filename, lineno,
                       "expected 5 tab-separated fields (modifier, head, rank, "
                       "frequency, paraphrase), got " +
                           std::to_string(fields.size()));
    }
    Compound compound;
    compound.modifier =
        parse_noun(fields[0], filename, lineno, "column 1 (modifier)");
    compound.head = parse_noun(fields[1], filename, lineno, "column 2 (head)");
    Row row;
    row.rank = static_cast<int>(
        parse_integer(fields[2], 0, filename, lineno, "column 3 (rank)"));
    row.frequency = static_cast<int>(
        parse_integer(fields[3], 1, filename, lineno, "column 4 (frequency)"));
    row.tokens = tokenize_lenient(fields[4]);
    if (row.tokens.empty()) {
      throw ParseError(filename, lineno, "column 5 (paraphrase): empty field");
    }
    row.line = lineno;
    if (!rows.contains(compound)) order.push_back(compound);
    rows[compound].push_back(std::move(row));
  }

  std::vector<GoldList> gold;
  for (const auto& compound : order) {
    auto& compound_rows = rows[compound];
    std::stable_sort(compound_rows.begin(), compound_rows.end(),
                     [](const Row& a, const Row& b) { return a.rank < b.rank; });
    GoldList list;
    list.compound = compound;
    int expected_rank = 0;
    int previous_frequency = 0;
    for (const auto& row : compound_rows) {
      if (row.rank > expected_rank) {
        throw ParseError(filename, row.line,
                         "compound '" + display(compound) +
                             "': ranks are not consecutive from 0 (missing rank " +
                             std::to_string(expected_rank) + ")");
      }
      if (row.rank == expected_rank) {
        if (expected_rank > 0 && row.frequency >= previous_frequency) {
          throw ParseError(filename, row.line,
                           "compound '" + display(compound) + "': rank " +
                               std::to_string(row.rank) +
                               " frequency must be below rank " +
                               std::to_string(row.rank - 1) + "'s");
        }
        previous_frequency = row.frequency;
        ++expected_rank;
      } else if (row.frequency != previous_frequency) {
        throw ParseError(filename, row.line,
                         "compound '" + display(compound) +
                             "': entries at rank " + std::to_string(row.rank) +
                             " disagree on frequency");
      }
      GoldEntry entry;
      entry.tokens = row.tokens;
      entry.rank = row.rank;
      entry.frequency = row.frequency;
      list.entries.push_back(std::move(entry));
    }
    gold.push_back(std::move(list));
  }
  return gold;
}

SystemSubmission parse_system_output(std::istream& in, const std::string& name,
                                     const std::string& filename) {
  struct Row {
    long position;
    std::string paraphrase;
    std::size_t line;
  };
  std::map<Compound, std::vector<Row>> rows;
  std::vector<Compound> order;

  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError(filename, lineno,
                       "expected 4 tab-separated fields (modifier, head, "
                       "position, paraphrase), got " +
                           std::to_string(fields.size()));
    }
    Compound compound;
    compound.modifier =
        parse_noun(fields[0], filename, lineno, "column 1 (modifier)");
    compound.head = parse_noun(fields[1], filename, lineno, "column 2 (head)");
    Row row;
    row.position =
        parse_integer(fields[2], 1, filename, lineno, "column 3 (position)");
    row.paraphrase = trimmed(fields[3]);
    if (row.paraphrase.empty()) {
      throw ParseError(filename, lineno, "column 4 (paraphrase): empty field");
    }
    row.line = lineno;
    if (!rows.contains(compound)) order.push_back(compound);
    rows[compound].push_back(std::move(row));
  }

  SystemSubmission submission;
  submission.name = name;
  for (const auto& compound : order) {
    auto& compound_rows = rows[compound];
    std::stable_sort(compound_rows.begin(), compound_rows.end(),
                     [](const Row& a, const Row& b) {
                       return a.position < b.position;
                     });
    SubmissionEntry entry;
    entry.compound = compound;
    long expected = 1;
    for (const auto& row : compound_rows) {
      if (row.position != expected) {
        const char* what =
            row.position < expected ? "duplicate" : "non-dense";
        throw ParseError(filename, row.line,
                         "compound '" + display(compound) + "': " + what +
                             " position " + std::to_string(row.position) +
                             " (expected " + std::to_string(expected) + ")");
      }
      ++expected;
      entry.paraphrases.push_back(row.paraphrase);
    }
    submission.entries.push_back(std::move(entry));
  }
  return submission;
}

void write_gold_file(std::ostream& out, std::vector<GoldList> gold) {
  std::sort(gold.begin(), gold.end(),
            [](const GoldList& a, const GoldList& b) {
              return a.compound < b.compound;
            });
  for (auto& list : gold) {
    std::stable_sort(list.entries.begin(), list.entries.end(),
                     [](const GoldEntry& a, const GoldEntry& b) {
                       if (a.rank != b.rank) return a.rank < b.rank;
                       return a.tokens < b.tokens;
                     });
    for (const auto& entry : list.entries) {
      out << list.compound.modifier << '\t' << list.compound.head << '\t'
          << entry.rank << '\t' << entry.frequency << '\t' << entry.text()
          << '\n';
    }
  }
}

void write_system_file(std::ostream& out, const SystemSubmission& submission) {
  for (const auto& entry : submission.entries) {
    for (std::size_t i = 0; i < entry.paraphrases.size(); ++i) {
      out << entry.compound.modifier << '\t' << entry.compound.head << '\t'
          << (i + 1) << '\t' << entry.paraphrases[i] << '\n';
    }
  }
}

}  // namespace ncpara
