#include "skewtor/report.hpp"

#include <json.hpp>

#include <sstream>

namespace skewtor {

ReportSection& Report::section(const std::string& title) {
  for (auto& s : sections)
    if (s.title == title) return s;
  sections.push_back({title, {}});
  return sections.back();
}

bool Report::any_failed() const {
  for (const auto& s : sections)
    for (const auto& it : s.items)
      if (it.status == ItemStatus::Failed) return true;
  return false;
}

std::string status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Ok:
      return "ok";
    case ItemStatus::Failed:
      return "failed";
    case ItemStatus::Info:
      return "info";
  }
  return "info";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "skewtor " << r.version << " | " << r.command << " | seed " << r.seed << "\n";
  for (const auto& s : r.sections) {
    os << "\n[" << s.title << "]\n";
    for (const auto& it : s.items) {
      os << "  " << (it.status == ItemStatus::Failed ? "FAIL" : it.status == ItemStatus::Ok ? "ok  "
                                                                                            : "info")
         << "  " << it.name;
      if (!it.value.empty()) os << " = " << it.value;
      if (!it.witness.empty()) os << "   [witness: " << it.witness << "]";
      os << "\n";
    }
  }
  os << "\nresult: " << (r.any_failed() ? "FAILED" : "ok") << "\n";
  return os.str();
}

std::string render_machine(const Report& r) {
  nlohmann::json doc;
  doc["command"] = r.command;
  doc["version"] = r.version;
  doc["seed"] = r.seed;
  doc["result"] = r.any_failed() ? "failed" : "ok";
  doc["sections"] = nlohmann::json::array();
  for (const auto& s : r.sections) {
    nlohmann::json sec;
    sec["title"] = s.title;
    sec["items"] = nlohmann::json::array();
    for (const auto& it : s.items) {
      nlohmann::json item;
      item["name"] = it.name;
      item["status"] = status_name(it.status);
      item["value"] = it.value;
      item["witness"] = it.witness;
      sec["items"].push_back(std::move(item));
    }
    doc["sections"].push_back(std::move(sec));
  }
  return doc.dump(2);
}

}  // namespace skewtor
