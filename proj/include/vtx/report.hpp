#ifndef VTX_REPORT_HPP
#define VTX_REPORT_HPP

#include <string>
#include <vector>

#include "vtx/laurent.hpp"

namespace vtx {

enum class Status { pass, fail, inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CheckEntry {
  std::string name;
  Status status = Status::inconclusive;
  // Failing checks carry the witnessing basis vector / multidegree and the
  // two disagreeing values, formatted; empty otherwise.
  std::string witness;
};

struct Report {
  std::string structure;
  Window window{0, 0};
  std::vector<CheckEntry> entries;

  void add(std::string name, Status st, std::string witness = "") {
    entries.push_back({std::move(name), st, std::move(witness)});
  }
  void add_pass_fail(std::string name, bool ok, std::string witness = "") {
    entries.push_back(
        {std::move(name), ok ? Status::pass : Status::fail,
         ok ? std::string{} : std::move(witness)});
  }
  void absorb(const Report& o) {
    for (const auto& e : o.entries) entries.push_back(e);
  }

  bool all_pass() const {
    for (const auto& e : entries)
      if (e.status != Status::pass) return false;
    return true;
  }
  bool any_fail() const {
    for (const auto& e : entries)
      if (e.status == Status::fail) return true;
    return false;
  }
  bool any_inconclusive() const {
    for (const auto& e : entries)
      if (e.status == Status::inconclusive) return true;
    return false;
  }
  Status verdict() const {
    if (any_fail()) return Status::fail;
    if (any_inconclusive()) return Status::inconclusive;
    return Status::pass;
  }
};

}  // namespace vtx

#endif
