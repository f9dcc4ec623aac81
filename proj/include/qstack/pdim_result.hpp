#pragma once

#include <string>

namespace qstack {

struct PdimResult {
  enum class Kind { Finite, Infinite, ExceedsCutoff };
  Kind kind = Kind::Finite;
  int value = -1;  // the dimension when finite (-1 for the zero module), the cutoff otherwise
  std::string reason;

  static PdimResult finite(int d, std::string why = {}) { return {Kind::Finite, d, std::move(why)}; }
  static PdimResult infinite(std::string why) { return {Kind::Infinite, -1, std::move(why)}; }
  static PdimResult cutoff(int c, std::string why = {}) { return {Kind::ExceedsCutoff, c, std::move(why)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  std::string str() const {
    switch (kind) {
      case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
      case Kind::Infinite: return "InfiniteDetected(" + reason + ")";
      default: return "ExceedsCutoff(" + std::to_string(value) + ")";
    }
  }
  friend bool operator==(const PdimResult& a, const PdimResult& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::Infinite || a.value == b.value;
  }
};

}  // namespace qstack
