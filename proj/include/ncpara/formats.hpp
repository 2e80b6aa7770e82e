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
//
// The three TSV formats (UTF-8, LF, `#` starts a comment line):
//
//   raw annotations   modifier <TAB> head <TAB> paraphrase [<TAB> annotator]
//   compiled gold     modifier <TAB> head <TAB> rank <TAB> frequency <TAB> paraphrase
//   system output     modifier <TAB> head <TAB> position <TAB> paraphrase
//
// Gold files are written sorted by (modifier, head, rank, paraphrase), so
// write(parse(x)) == x for compiled gold. System positions are 1-based and
// must be dense per compound.

#ifndef NCPARA_FORMATS_HPP
#define NCPARA_FORMATS_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpara/gold.hpp"

namespace ncpara {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }  // 0 when not tied to one line

 private:
  std::string file_;
  std::size_t line_;
};

std::vector<AnnotationRecord> parse_raw_annotations(std::istream& in,
                                                    const std::string& filename = "");

std::vector<GoldList> parse_gold_file(std::istream& in,
                                      const std::string& filename = "");

SystemSubmission parse_system_output(std::istream& in, const std::string& name,
                                     const std::string& filename = "");

void write_gold_file(std::ostream& out, std::vector<GoldList> gold);

void write_system_file(std::ostream& out, const SystemSubmission& submission);

}  // namespace ncpara

#endif  // NCPARA_FORMATS_HPP
