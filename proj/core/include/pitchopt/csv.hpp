// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_CSV_HPP_
#define PITCHOPT_CSV_HPP_

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pitchopt {

// Minimal RFC-4180 CSV writer: header row always emitted, fields quoted
// only when they need to be.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void row(const std::vector<std::string>& fields);

  static std::string quote(std::string_view field);
  static std::string num(double v);

 private:
  std::ostream& out_;
  size_t columns_;
};

}  // namespace pitchopt

#endif  // PITCHOPT_CSV_HPP_
