#include "rpog/verdict.hpp"

namespace rpog {

Verdict Verdict::yes(std::string law_name, std::string detail_text) {
  Verdict v;
  v.holds = true;
  v.law = std::move(law_name);
  v.detail = std::move(detail_text);
  return v;
}

Verdict Verdict::no(std::string law_name, std::vector<Binding> w,
                    std::string detail_text) {
  Verdict v;
  v.holds = false;
  v.law = std::move(law_name);
  v.detail = std::move(detail_text);
  v.witness = std::move(w);
  return v;
}

const Binding* Verdict::find(const std::string& binding_name) const {
  for (const auto& b : witness)
    if (b.name == binding_name) return &b;
  return nullptr;
}

std::string Verdict::witness_text() const {
  std::string out;
  for (const auto& b : witness) {
    if (!out.empty()) out += ", ";
    out += b.name + "=" + b.value;
  }
  return out;
}

}  // namespace rpog
