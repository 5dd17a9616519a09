#include "hallp1/drinfeld.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "hallp1/hall_global.hpp"
#include "hallp1/linsolve.hpp"
#include "hallp1/partition.hpp"
#include "hallp1/torsion.hpp"

namespace hallp1 {

namespace {

int leftmost_reducible(const GenWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const GenLetter &l = w[i], &r = w[i + 1];
    if (l.is_h && !r.is_h) return static_cast<int>(i);
    if (l.is_h && r.is_h && l.index > r.index) return static_cast<int>(i);
    if (!l.is_h && !r.is_h && l.index > r.index) return static_cast<int>(i);
  }
  return -1;
}

GenWord splice(const GenWord& w, std::size_t i, const GenWord& mid) {
  GenWord out(w.begin(), w.begin() + i);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + i + 2, w.end());
  return out;
}

void push_word(std::map<GenWord, Coeff>& pending, GenWord w, const Coeff& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = pending.emplace(std::move(w), k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) pending.erase(it);
  }
}

PBWMonomial monomial_of_normal_word(const GenWord& w) {
  PBWMonomial mon;
  for (const GenLetter& l : w) {
    if (l.is_h)
      mon.d[l.index] += 1;
    else
      mon.c[l.index] += 1;
  }
  return mon;
}

// Product of pure-PT elements: exponent merge, no straightening needed.
BElement d_mult(const BElement& a, const BElement& b) {
  BElement out;
  for (const auto& [ma, ka] : a) {
    for (const auto& [mb, kb] : b) {
      PBWMonomial m = ma;
      for (const auto& [r, e] : mb.d) m.d[r] += e;
      b_add_term(out, m, ka * kb);
    }
  }
  return out;
}

}  // namespace

BElement v_normal_form(const std::map<GenWord, Coeff>& words, long q) {
  std::map<GenWord, Coeff> pending = words;
  BElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const GenWord& w = node.key();
    Coeff k = node.mapped();
    if (k.is_zero()) continue;
    int i = leftmost_reducible(w);
    if (i < 0) {
      b_add_term(out, monomial_of_normal_word(w), k);
      continue;
    }
    const GenLetter &l = w[i], &r = w[i + 1];
    if (l.is_h && !r.is_h) {
      // (V-a)
      for (int s = 0; s <= l.index; ++s) {
        GenWord mid{g_letter(r.index + s)};
        if (l.index - s > 0) mid.push_back(h_letter(l.index - s));
        push_word(pending, splice(w, i, mid), k * qnum(s + 1, q));
      }
    } else if (l.is_h && r.is_h) {
      // (V-b)
      push_word(pending, splice(w, i, {r, l}), k);
    } else {
      // (V-c)
      int n = l.index, m = r.index;
      Coeff kq = k * Coeff::from_int(q, q);
      if (n == m + 1) {
        push_word(pending, splice(w, i, {g_letter(m), g_letter(n)}), kq);
      } else {
        push_word(pending, splice(w, i, {g_letter(m), g_letter(n)}), kq);
        push_word(pending, splice(w, i, {g_letter(n - 1), g_letter(m + 1)}), kq);
        push_word(pending, splice(w, i, {g_letter(m + 1), g_letter(n - 1)}), -k);
      }
    }
  }
  return out;
}

BElement v_normal_form(const GenWord& w, long q) {
  return v_normal_form(std::map<GenWord, Coeff>{{w, Coeff::one(q)}}, q);
}

BElement v_product(const BElement& f, const BElement& g, long q) {
  std::map<GenWord, Coeff> pending;
  for (const auto& [mf, kf] : f) {
    GenWord base = mf.to_word();
    for (const auto& [mg, kg] : g) {
      GenWord w = base;
      GenWord tail = mg.to_word();
      w.insert(w.end(), tail.begin(), tail.end());
      push_word(pending, std::move(w), kf * kg);
    }
  }
  return v_normal_form(pending, q);
}

BElement p_from_ptilde(int r, long q) {
  if (r < 1) throw std::invalid_argument("p_from_ptilde: r must be positive");
  std::vector<BElement> p(r + 1);
  for (int k = 1; k <= r; ++k) {
    BElement pk;
    b_add_term(pk, PBWMonomial::single_h(k), -Coeff::one(q));
    for (int s = 1; s < k; ++s) {
      BElement pts;
      b_add_term(pts, PBWMonomial::single_h(s), Coeff::one(q));
      pk = b_sub(pk, d_mult(pts, p[k - s]));
    }
    p[k] = std::move(pk);
  }
  return p[r];
}

BElement psitilde_from_ptilde(int r, long q) {
  if (r < 1) throw std::invalid_argument("psitilde_from_ptilde: r must be positive");
  std::vector<BElement> psi(r + 1);
  for (int k = 1; k <= r; ++k) {
    BElement pk;
    b_add_term(pk, PBWMonomial::single_h(k), qnum(k, q));
    for (int s = 1; s < k; ++s) {
      BElement pts;
      b_add_term(pts, PBWMonomial::single_h(s), Coeff::v_pow(-s, q));
      pk = b_sub(pk, d_mult(pts, psi[k - s]));
    }
    psi[k] = std::move(pk);
  }
  return psi[r];
}

namespace {

void enumerate_words(const std::vector<GenLetter>& alphabet, int max_len,
                     long max_weight, GenWord& acc,
                     const std::function<void(const GenWord&)>& visit) {
  if (!acc.empty()) visit(acc);
  if (static_cast<int>(acc.size()) == max_len) return;
  for (const GenLetter& l : alphabet) {
    acc.push_back(l);
    if (word_weight(acc) <= max_weight)
      enumerate_words(alphabet, max_len, max_weight, acc, visit);
    acc.pop_back();
  }
}

// Expands target in the basis {h_lambda = prod_i hhat_{lambda_i}} of its
// degree. Returns the PT/h-monomial element, or nullopt if the expansion
// does not exist.
std::optional<BElement> expand_in_h_monomials(const TorsionElement& target, int r) {
  long q = target.q;
  std::vector<Partition> parts = partitions_of(r);

  std::vector<TorsionElement> hr;
  for (int s = 0; s <= r; ++s) hr.push_back(hhat_global(q, s));
  std::vector<TorsionElement> basis;
  for (const Partition& lam : parts) {
    TorsionElement e = TorsionElement::unit(q);
    for (int part : lam) e = mult_torsion(e, hr[part]);
    basis.push_back(std::move(e));
  }

  std::map<TorsionClass, std::size_t> row_of;
  auto row_index = [&row_of](const TorsionClass& c) {
    return row_of.emplace(c, row_of.size()).first->second;
  };
  for (const TorsionElement& e : basis)
    for (const auto& [c, k] : e.terms) row_index(c);
  for (const auto& [c, k] : target.terms) row_index(c);

  LinearSystem sys;
  std::vector<std::vector<Coeff>> rows(
      row_of.size(), std::vector<Coeff>(parts.size(), Coeff::zero(q)));
  std::vector<Coeff> rhs(row_of.size(), Coeff::zero(q));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [c, k] : basis[j].terms) rows[row_of[c]][j] = k;
  for (const auto& [c, k] : target.terms) rhs[row_of[c]] = k;
  for (std::size_t i = 0; i < rows.size(); ++i)
    sys.add_equation(std::move(rows[i]), rhs[i]);

  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  BElement out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    PBWMonomial mon;
    for (int part : parts[j]) mon.d[part] += 1;
    b_add_term(out, mon, (*sol)[j]);
  }
  return out;
}

}  // namespace

IsoReport iso_check(long q, int max_total_degree) {
  IsoReport report;
  report.q = q;
  report.max_total_degree = max_total_degree;

  // (i) word-by-word agreement of the two straightening engines.
  std::vector<GenLetter> alphabet;
  for (int n = -2; n <= 2; ++n) alphabet.push_back(g_letter(n));
  for (int r = 1; r <= 3; ++r) alphabet.push_back(h_letter(r));
  GenWord acc;
  enumerate_words(alphabet, 4, max_total_degree, acc, [&](const GenWord& w) {
    BElement sheaf_side = normal_form(w, q);
    BElement loop_side = v_normal_form(w, q);
    ++report.checked;
    if (sheaf_side != loop_side)
      report.mismatches.push_back({word_to_string(w),
                                   "sheaf side: " + b_to_string(sheaf_side) +
                                       " | loop side: " + b_to_string(loop_side)});
  });

  // (ii) series elements under the generator dictionary.
  TorsionSeries eh = ehat_series_global(q, max_total_degree);
  TorsionSeries qh = qhat_series_global(q, max_total_degree);
  Coeff v_minus_vinv = Coeff::v_pow(1, q) - Coeff::v_pow(-1, q);
  for (int r = 1; r <= max_total_degree; ++r) {
    ++report.checked;
    auto ehat_image = expand_in_h_monomials(eh.at(r), r);
    if (!ehat_image) {
      report.mismatches.push_back({"ehat_" + std::to_string(r),
                                   "not expressible in h-monomials of degree " +
                                       std::to_string(r)});
    } else {
      BElement want = p_from_ptilde(r, q);
      if (*ehat_image != want)
        report.mismatches.push_back({"ehat_" + std::to_string(r),
                                     "sheaf side: " + b_to_string(*ehat_image) +
                                         " | loop side: " + b_to_string(want)});
    }

    ++report.checked;
    auto qhat_image = expand_in_h_monomials(qh.at(r), r);
    if (!qhat_image) {
      report.mismatches.push_back({"qhat_" + std::to_string(r),
                                   "not expressible in h-monomials of degree " +
                                       std::to_string(r)});
    } else {
      BElement want = b_scaled(psitilde_from_ptilde(r, q), v_minus_vinv);
      if (*qhat_image != want)
        report.mismatches.push_back({"qhat_" + std::to_string(r),
                                     "sheaf side: " + b_to_string(*qhat_image) +
                                         " | loop side: " + b_to_string(want)});
    }
  }
  return report;
}

}  // namespace hallp1
