#ifndef HGMAN_CHECK_HPP
#define HGMAN_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

namespace hgman {

enum class CheckStatus : unsigned char { pass, fail, skipped };

/// One verified identity or property. `detail` carries the first
/// counterexample indices (1-based) on failure, or the reason when skipped.
struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;

  static CheckItem passed(std::string name) { return {std::move(name), CheckStatus::pass, ""}; }
  static CheckItem failed(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::fail, std::move(detail)};
  }
  static CheckItem skip(std::string name, std::string reason) {
    return {std::move(name), CheckStatus::skipped, std::move(reason)};
  }

  /// "pass", "fail: <detail>" or "skipped: <reason>" for reports.
  std::string render() const {
    switch (status) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail: " + detail;
      default:
        return "skipped: " + detail;
    }
  }
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(CheckItem item) { items.push_back(std::move(item)); }
  void merge(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool all_passed() const {
    for (const auto& it : items)
      if (it.status == CheckStatus::fail) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
};

}  // namespace hgman

#endif
