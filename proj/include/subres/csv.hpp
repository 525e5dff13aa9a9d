#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace subres::csv {

/// Shortest-ambiguity-free fixed format: 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format(double value);

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void comment(std::string_view text);
  void header(std::initializer_list<std::string_view> columns);
  void row(std::span<const double> values);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& out_;
};

}  // namespace subres::csv
