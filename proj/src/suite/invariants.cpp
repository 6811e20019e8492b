#include <sstream>

#include "hamloc/error.hpp"
#include "hamloc/suite.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::suite {

namespace th = hamloc::theorems;
using nlohmann::ordered_json;

namespace {

struct Invariants {
  int n;
  TruncPoly c_m, c_x, c_y, c_nx, c_ny;
  std::vector<int> betti;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::pair<TruncPoly, TruncPoly>>> basis;
};

TruncPoly binomial_row(int n) { return (TruncPoly::constant(n, 1) + TruncPoly::g(n)).pow(static_cast<unsigned>(n + 1)); }

Invariants compute(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  Invariants inv{n, {}, {}, {}, {}, {}, {}, {}, {}};
  const int top = 2 * n;
  const TruncPoly one = TruncPoly::constant(top, 1);
  inv.c_m = (one + TruncPoly::g(top)).pow(static_cast<unsigned>(2 * n + 2)) *
            poly_invert_unit(one + TruncPoly::monomial(top, 0, 1, 2));
  inv.c_x = n >= 2 ? th::derive_total_chern_X(n) : binomial_row(n);
  inv.c_y = binomial_row(n);
  inv.c_nx = th::normal_chern_class(n);
  inv.c_ny = inv.c_nx;

  const auto ring = th::ring_presentation(n);
  inv.betti = ring.betti;
  inv.relations = ring.relations;

  const HamiltonianModel m = grassmannian_model(n);
  const TruncPoly ux = restrict_u_tilde(m, ComponentName::X);
  const TruncPoly uy = restrict_u_tilde(m, ComponentName::Y);
  for (int i = 0; i <= n; ++i) {
    const auto e = static_cast<unsigned>(i);
    inv.basis.push_back({"u~^" + std::to_string(i), {ux.pow(e), uy.pow(e)}});
  }
  for (int i = 0; i <= n; ++i)
    inv.basis.push_back({"beta_" + std::to_string(i), {TruncPoly(n), TruncPoly::monomial(n, 0, i) * m.y.euler_class}});
  return inv;
}

ordered_json coefficients(const TruncPoly& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i <= p.trunc_order(); ++i) out.push_back(format_rational(p.coefficient(0, i)));
  return out;
}

// "1 + 4·[w] + 8·[w]^2", lowest degree first.
std::string ascending(const TruncPoly& p, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.trunc_order(); ++i) {
    Rational c = p.coefficient(0, i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    if (c < 0) c = -c;
    first = false;
    if (i == 0) {
      os << format_rational(c);
      continue;
    }
    if (c != 1) os << format_rational(c) << "·";
    os << var;
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

}  // namespace

ordered_json invariants_json(int n) {
  const Invariants inv = compute(n);
  ordered_json basis = ordered_json::array();
  for (const auto& [name, r] : inv.basis)
    basis.push_back({{"name", name}, {"at_x", r.first.to_string("u")}, {"at_y", r.second.to_string("v")}});
  return ordered_json{{"n", n},
                      {"dim", 4 * n},
                      {"chern_classes",
                       {{"M", coefficients(inv.c_m)},
                        {"c1_M", format_rational(inv.c_m.coefficient(0, 1))},
                        {"X", coefficients(inv.c_x)},
                        {"Y", coefficients(inv.c_y)},
                        {"N_X", coefficients(inv.c_nx)},
                        {"N_Y", coefficients(inv.c_ny)}}},
                      {"betti", inv.betti},
                      {"relations", inv.relations},
                      {"equivariant_basis", std::move(basis)}};
}

std::string emit_invariants(int n, Format format) {
  if (format == Format::Json) return invariants_json(n).dump(2) + "\n";
  const Invariants inv = compute(n);
  std::ostringstream os;
  os << "n = " << n << ", dim M = " << 4 * n << '\n';
  os << "c(M) = " << ascending(inv.c_m, "[w]") << "  (through degree " << 4 * n << ")\n";
  os << "c1(M) = " << format_rational(inv.c_m.coefficient(0, 1)) << "·[w]\n";
  os << "c(X) = " << ascending(inv.c_x, "u") << '\n';
  os << "c(Y) = " << ascending(inv.c_y, "v") << '\n';
  os << "c(N_X) = " << ascending(inv.c_nx, "u") << '\n';
  os << "c(N_Y) = " << ascending(inv.c_ny, "v") << '\n';
  os << "betti = [";
  for (std::size_t i = 0; i < inv.betti.size(); ++i) os << (i ? ", " : "") << inv.betti[i];
  os << "]\n";
  os << "relations: ";
  for (std::size_t i = 0; i < inv.relations.size(); ++i) os << (i ? "; " : "") << inv.relations[i];
  os << '\n';
  for (const auto& [name, r] : inv.basis)
    os << name << ": X -> " << r.first.to_string("u") << ", Y -> " << r.second.to_string("v") << '\n';
  return os.str();
}

}  // namespace hamloc::suite
