#include "hallp1/pbw.hpp"

namespace hallp1 {

std::string word_to_string(const GenWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].to_string();
  }
  return s;
}

long word_weight(const GenWord& w) {
  long t = 0;
  for (const GenLetter& l : w) t += l.is_h ? l.index : 1;
  return t;
}

long PBWMonomial::rank() const {
  long t = 0;
  for (const auto& [n, m] : c) t += m;
  return t;
}

long PBWMonomial::h_degree() const {
  long t = 0;
  for (const auto& [r, e] : d) t += static_cast<long>(r) * e;
  return t;
}

GenWord PBWMonomial::to_word() const {
  GenWord w;
  for (const auto& [n, m] : c)
    for (int i = 0; i < m; ++i) w.push_back(g_letter(n));
  for (const auto& [r, e] : d)
    for (int i = 0; i < e; ++i) w.push_back(h_letter(r));
  return w;
}

std::string PBWMonomial::to_string() const {
  if (is_unit()) return "1";
  std::string s;
  auto append = [&s](char tag, int idx, int exp) {
    if (!s.empty()) s += "*";
    s += tag + std::to_string(idx);
    if (exp > 1) s += "^" + std::to_string(exp);
  };
  for (const auto& [n, m] : c) append('g', n, m);
  for (const auto& [r, e] : d) append('h', r, e);
  return s;
}

void b_add_term(BElement& f, const PBWMonomial& m, const Coeff& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = f.emplace(m, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) f.erase(it);
  }
}

BElement b_add(const BElement& f, const BElement& g) {
  BElement out = f;
  for (const auto& [m, k] : g) b_add_term(out, m, k);
  return out;
}

BElement b_sub(const BElement& f, const BElement& g) {
  BElement out = f;
  for (const auto& [m, k] : g) b_add_term(out, m, -k);
  return out;
}

BElement b_scaled(const BElement& f, const Coeff& k) {
  BElement out;
  if (k.is_zero()) return out;
  for (const auto& [m, w] : f) out.emplace(m, w * k);
  return out;
}

std::string b_to_string(const BElement& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [m, k] : f) {
    if (!s.empty()) s += " + ";
    if (k.is_one())
      s += m.to_string();
    else
      s += "(" + k.to_string() + ")*" + m.to_string();
  }
  return s;
}

}  // namespace hallp1
