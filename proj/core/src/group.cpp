#include "specials/group.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "specials/hj.hpp"

namespace specials {

namespace {

long long parse_int(std::string_view s, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad integer in group spec: " + what);
  return v;
}

bool residue_ok(family f, long long m) {
  switch (f) {
    case family::T: {
      long long d = m % 6;
      return d == 1 || d == 3 || d == 5;
    }
    case family::O: {
      long long d = m % 12;
      return d == 1 || d == 5 || d == 7 || d == 11;
    }
    case family::I: {
      long long d = m % 30;
      return d == 1 || d == 7 || d == 11 || d == 13 || d == 17 || d == 19 ||
             d == 23 || d == 29;
    }
    default: return false;
  }
}

}  // namespace

char family_letter(family f) {
  switch (f) {
    case family::A: return 'A';
    case family::D: return 'D';
    case family::T: return 'T';
    case family::O: return 'O';
    case family::I: return 'I';
  }
  return '?';
}

group_params parse_group(const std::string& spec) {
  if (spec.size() < 3 || spec[1] != ':')
    throw std::invalid_argument("group spec must look like A:r,a | D:n,q | T:m | O:m | I:m");
  group_params g;
  switch (spec[0]) {
    case 'A': g.fam = family::A; break;
    case 'D': g.fam = family::D; break;
    case 'T': g.fam = family::T; break;
    case 'O': g.fam = family::O; break;
    case 'I': g.fam = family::I; break;
    default: throw std::invalid_argument("unknown family letter in group spec");
  }
  std::string_view rest{spec};
  rest.remove_prefix(2);
  if (g.fam == family::A || g.fam == family::D) {
    auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("two-parameter family needs <p>,<q>");
    g.p1 = parse_int(rest.substr(0, comma), spec);
    g.p2 = parse_int(rest.substr(comma + 1), spec);
  } else {
    g.p1 = parse_int(rest, spec);
  }
  validate(g);
  return g;
}

std::string format_group(const group_params& g) {
  std::string s(1, family_letter(g.fam));
  s += ':';
  s += std::to_string(g.p1);
  if (g.fam == family::A || g.fam == family::D) {
    s += ',';
    s += std::to_string(g.p2);
  }
  return s;
}

void validate(const group_params& g) {
  switch (g.fam) {
    case family::A:
      if (!(1 < g.p2 && g.p2 < g.p1))
        throw std::invalid_argument("A(r,a): need 1 < a < r");
      if (std::gcd(g.p1, g.p2) != 1)
        throw std::invalid_argument("A(r,a): r and a must be coprime");
      break;
    case family::D:
      if (!(1 < g.p2 && g.p2 < g.p1))
        throw std::invalid_argument("D(n,q): need 1 < q < n");
      if (std::gcd(g.p1, g.p2) != 1)
        throw std::invalid_argument("D(n,q): n and q must be coprime");
      break;
    case family::T:
      if (g.p1 < 1 || !residue_ok(family::T, g.p1))
        throw std::invalid_argument("T(m): need m = 1, 3, 5 mod 6");
      break;
    case family::O:
      if (g.p1 < 1 || !residue_ok(family::O, g.p1))
        throw std::invalid_argument("O(m): need m = 1, 5, 7, 11 mod 12");
      break;
    case family::I:
      if (g.p1 < 1 || !residue_ok(family::I, g.p1))
        throw std::invalid_argument("I(m): need m coprime to 30 mod 30");
      break;
  }
}

bool is_valid(const group_params& g) {
  try {
    validate(g);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

family_data compute_family_data(const group_params& g) {
  validate(g);
  family_data fd;
  switch (g.fam) {
    case family::T:
    case family::O:
    case family::I: {
      long long k = g.fam == family::T ? 6 : g.fam == family::O ? 12 : 30;
      fd.delta = g.m() % k;
      fd.b = (g.m() - fd.delta) / k + 2;
      if (k * (fd.b - 2) + fd.delta != g.m())
        throw std::logic_error("family_data: m reconstruction failed");
      break;
    }
    case family::D: {
      auto hj = hj_expand(g.n(), g.q());
      // Largest run of leading 2's; when the whole expansion is 2's the
      // fundamental cycle still ends in a 1, so nu caps at N-1.
      long long run = 0;
      for (long long al : hj.alphas) {
        if (al != 2) break;
        ++run;
      }
      long long N = static_cast<long long>(hj.alphas.size());
      fd.nu = std::min(run, N - 1);
      fd.nq_even = ((g.n() - g.q()) % 2) == 0;
      break;
    }
    case family::A: break;
  }
  return fd;
}

long long group_order(const group_params& g) {
  switch (g.fam) {
    case family::A: return g.r();
    case family::D: return 4 * g.q() * (g.n() - g.q());
    case family::T: return 24 * g.m();
    case family::O: return 48 * g.m();
    case family::I: return 120 * g.m();
  }
  return 0;
}

bool is_gorenstein(const group_params& g) {
  switch (g.fam) {
    case family::A: return g.a() == g.r() - 1;
    case family::D: return g.q() == g.n() - 1;
    case family::T:
    case family::O:
    case family::I: return g.m() == 1;
  }
  return false;
}

}  // namespace specials
