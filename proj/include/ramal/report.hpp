#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ramal {

/// Ordered key/value lines plus free-form notes. The structured rendering
/// carries only the key/value lines and is byte-stable for identical runs;
/// the text rendering appends the notes.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> notes;
  int exit_code = 0;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }

  void note(std::string text) { notes.push_back(std::move(text)); }

  std::string render(bool structured) const;
};

}  // namespace ramal
