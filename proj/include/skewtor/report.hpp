#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewtor {

// Presentation layer: every math value is carried as an exact canonical string
// (rationals as "p/q", polynomials via Scalar::str), never as a float.
enum class ItemStatus { Ok, Failed, Info };

struct ReportItem {
  std::string name;
  ItemStatus status = ItemStatus::Info;
  std::string value;    // exact value or verdict text
  std::string witness;  // counterexample / residual when failed
};

struct ReportSection {
  std::string title;
  std::vector<ReportItem> items;
};

struct Report {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<ReportSection> sections;

  ReportSection& section(const std::string& title);
  bool any_failed() const;
};

std::string status_name(ItemStatus s);
std::string render_text(const Report& r);
std::string render_machine(const Report& r);  // one JSON document

}  // namespace skewtor
