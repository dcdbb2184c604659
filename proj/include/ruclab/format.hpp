// Copyright 2026 The ruclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RUCLAB_FORMAT_HPP_
#define RUCLAB_FORMAT_HPP_

#include <cstdio>
#include <string>
#include <vector>

namespace ruclab::format {

// Round-trippable, locale-independent ('.' decimal) rendering used by every
// table writer; identical inputs give byte-identical files.
inline std::string number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

}  // namespace ruclab::format

#endif  // RUCLAB_FORMAT_HPP_
