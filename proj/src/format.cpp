#include "satake/format.hpp"

#include <cctype>
#include <sstream>

namespace satake {

std::string format_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string format_series(const GradedSeries& s) {
  std::ostringstream os;
  os << "level " << s.k << " | ";
  bool first = true;
  for (const auto& [key, c] : s.coeffs) {
    if (key.n >= s.trunc) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << " v^" << key.n << " x^" << format_vector(key.lam);
  }
  if (first) os << "0";
  os << " (certified to v^" << s.trunc << ")";
  return os.str();
}

std::string format_hecke(const HeckeElement& h) {
  std::ostringstream os;
  os << "level " << h.k << " | ";
  bool first = true;
  for (const auto& [key, c] : h.coeffs) {
    if (key.a >= h.trunc) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << " v^" << key.a << " x^" << format_vector(key.mu_bar);
  }
  if (first) os << "0";
  os << " (certified to v^" << h.trunc << ")";
  return os.str();
}

std::string format_principal(const PrincipalSeriesElement& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.coeffs) {
    if (w.n >= f.trunc) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << " t^" << w.k << " v^" << w.n << " x^" << format_vector(w.lam);
  }
  if (first) os << "0";
  os << " (certified to v^" << f.trunc << ")";
  return os.str();
}

std::string format_heisenberg(const HeisenbergElement& g) {
  std::ostringstream os;
  os << "(" << g.a << ", " << format_vector(g.lam) << ", " << format_vector(g.mu) << ", "
     << g.k << ")";
  return os.str();
}

std::string format_label(const DoubleCosetLabel& label) {
  std::ostringstream os;
  os << "(k=" << label.k << ", a=" << label.a << ", mu=" << format_vector(label.mu_bar) << ")";
  return os.str();
}

std::string format_weight(const AffineWeight& w) {
  std::ostringstream os;
  os << "(" << w.k << ", " << format_vector(w.lam) << ", " << w.n << ")";
  return os.str();
}

LatticeVector parse_int_list(const std::string& text) {
  LatticeVector out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw config_error("empty entry in integer list \"" + text + "\"");
    try {
      out.push_back(Int(cur));
    } catch (const std::exception&) {
      throw config_error("bad integer \"" + cur + "\" in list \"" + text + "\"");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  return out;
}

}  // namespace satake
