#include "ramal/report.hpp"

namespace ramal {

std::string Report::render(bool structured) const {
  std::string out;
  for (const auto& [key, value] : fields) {
    out += key;
    out += structured ? "\t" : ": ";
    out += value;
    out += "\n";
  }
  if (!structured) {
    for (const auto& n : notes) {
      out += "note: ";
      out += n;
      out += "\n";
    }
  }
  return out;
}

}  // namespace ramal
