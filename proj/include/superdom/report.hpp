#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace superdom {

/// Outcome of a verification battery. Failures are data, not exceptions.
struct CheckReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }

  void pass() { ++passed; }
  void fail(std::string what) {
    ++failed;
    failures.push_back(std::move(what));
  }
  void skip(std::string why) {
    ++skipped;
    notes.push_back(std::move(why));
  }
  void record(bool good, const std::string& what) {
    if (good)
      pass();
    else
      fail(what);
  }
  void merge(const CheckReport& other);

  std::string summary() const;
};

}  // namespace superdom
