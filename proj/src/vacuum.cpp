#include "momentrec/vacuum.hpp"

#include <map>
#include <tuple>

#include "momentrec/error.hpp"

namespace momentrec {

namespace {

using Key = std::tuple<int, int, int>;

std::string key_string(const Key& k) {
  return "V(" + std::to_string(std::get<0>(k)) + "," + std::to_string(std::get<1>(k)) + "," +
         std::to_string(std::get<2>(k)) + ")";
}

struct Pending {
  BigRational coeff;
  std::string chain;
};

}  // namespace

std::vector<VTerm> reduce_V(const VTerm& v) {
  if (v.n < 0 || v.a < 0 || v.b < 0) throw DomainError("V needs nonnegative indices");
  std::map<Key, Pending> work;
  const Key start{v.n, v.a, v.b};
  work[start] = {v.coeff, key_string(start)};

  auto add = [&work](const Key& k, const BigRational& c, const std::string& chain) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = work.try_emplace(k, Pending{c, chain + " -> " + key_string(k)});
    if (!inserted) it->second.coeff += c;
  };

  // Every step lowers n and a, so mixed keys only spawn smaller ones and the
  // loop terminates; taking the largest key first merges duplicates early.
  while (true) {
    auto it = work.end();
    for (auto jt = work.begin(); jt != work.end(); ++jt) {
      const auto [m, a, b] = jt->first;
      if (a > 0 && b > 0 && sgn(jt->second.coeff) != 0) it = jt;
    }
    if (it == work.end()) break;
    const auto [m, alpha, beta] = it->first;
    const Pending p = it->second;
    work.erase(it);
    // V(m,a,b) = -[2m V(m-1,a-1,b+1) + (a-1) V(m-1,a-2,b+2)] / (b+1)
    const BigRational scale = -p.coeff / (beta + 1);
    if (m == 0) {
      throw DomainError("reduction of V needs n = -1 at " + p.chain + " -> " +
                        key_string({m - 1, alpha - 1, beta + 1}));
    }
    add({m - 1, alpha - 1, beta + 1}, scale * (2 * m), p.chain);
    if (alpha >= 2) add({m - 1, alpha - 2, beta + 2}, scale * (alpha - 1), p.chain);
  }

  std::vector<VTerm> out;
  for (const auto& [k, p] : work) {
    if (sgn(p.coeff) == 0) continue;
    out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), p.coeff});
  }
  return out;
}

std::string to_string(const VTerm& v) {
  return v.coeff.get_str() + "*V(" + std::to_string(v.n) + "," + std::to_string(v.a) + "," +
         std::to_string(v.b) + ")";
}

}  // namespace momentrec
