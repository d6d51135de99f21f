#include "skewtor/params.hpp"

#include "skewtor/error.hpp"

#include <mutex>
#include <unordered_map>

namespace skewtor {

namespace {

struct Table {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

int ParamRegistry::declare(const std::string& name) {
  std::string canon = normalize_param_name(name);
  if (canon.empty()) throw InputError("empty parameter name");
  Table& t = table();
  std::scoped_lock lock(t.mu);
  auto it = t.ids.find(canon);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(canon);
  t.ids.emplace(canon, id);
  return id;
}

std::optional<int> ParamRegistry::lookup(const std::string& name) {
  std::string canon = normalize_param_name(name);
  Table& t = table();
  std::scoped_lock lock(t.mu);
  auto it = t.ids.find(canon);
  if (it == t.ids.end()) return std::nullopt;
  return it->second;
}

const std::string& ParamRegistry::name(int id) {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  if (id < 0 || id >= static_cast<int>(t.names.size()))
    throw Error("parameter id out of range");
  return t.names[static_cast<std::size_t>(id)];
}

int ParamRegistry::count() {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  return static_cast<int>(t.names.size());
}

std::string normalize_param_name(const std::string& raw) {
  // Recognized UTF-8 sequences: Greek lambda (lowercase), Greek mu, and the
  // subscript digits U+2080..U+2089.
  std::string out;
  std::size_t i = 0;
  while (i < raw.size()) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c < 0x80) {
      out.push_back(raw[i]);
      ++i;
      continue;
    }
    if (i + 1 < raw.size() && c == 0xCE && static_cast<unsigned char>(raw[i + 1]) == 0xBB) {
      out.push_back('l');  // λ
      i += 2;
      continue;
    }
    if (i + 1 < raw.size() && c == 0xCE && static_cast<unsigned char>(raw[i + 1]) == 0xBC) {
      out.push_back('m');  // μ
      i += 2;
      continue;
    }
    if (i + 2 < raw.size() && c == 0xE2 && static_cast<unsigned char>(raw[i + 1]) == 0x82) {
      unsigned char d = static_cast<unsigned char>(raw[i + 2]);
      if (d >= 0x80 && d <= 0x89) {
        out.push_back(static_cast<char>('0' + (d - 0x80)));
        i += 3;
        continue;
      }
    }
    throw InputError("unsupported character in parameter name '" + raw + "'");
  }
  return out;
}

}  // namespace skewtor
