#include "yangkit/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace yangkit {

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0, 1);

// Poles of the form u = base + k * period for k in [-4, 4].
std::function<double(cd)> lattice_poles(std::vector<std::pair<cd, cd>> families) {
  return [families](cd u) {
    double best = std::numeric_limits<double>::infinity();
    for (auto [base, period] : families)
      for (int k = -4; k <= 4; ++k)
        best = std::min(best, std::abs(u - (base + double(k) * period)));
    return best;
  };
}

std::function<double(cd)> point_poles(std::vector<cd> pts) {
  return [pts](cd u) {
    double best = std::numeric_limits<double>::infinity();
    for (cd p : pts) best = std::min(best, std::abs(u - p));
    return best;
  };
}

std::function<double(cd)> no_poles() {
  return [](cd) { return std::numeric_limits<double>::infinity(); };
}

// (e^{x u} - 1) / x with the x -> 0 limit.
cd expm1_over(cd x, cd u) {
  if (std::abs(x) < 1e-14) return u;
  return (std::exp(x * u) - 1.0) / x;
}

cd acot(cd z) { return std::atan(1.0 / z); }

using RList = std::array<cd, 10>;

RMatrixFn from_rlist(std::function<RList(cd)> r, std::function<double(cd)> poles,
                     std::string desc) {
  return RMatrixFn{[r](cd u) { return r_template(r(u)); }, std::move(poles), std::move(desc)};
}

RMatrixFn model1(const ModelSpec& s) {
  const Branch br = s.branch.value_or(Branch::Generic);
  if (br == Branch::BZero) {
    cd a = s.param("a"), c = s.param("c"), d = s.param("d");
    return from_rlist(
        [=](cd u) {
          RList r{};
          r[1] = 1.0; r[5] = 1.0;
          r[2] = d * expm1_over(a + c, u);
          r[6] = std::exp(a * u); r[9] = std::exp(c * u);
          return r;
        },
        no_poles(), "none");
  }
  if (br == Branch::ACZero) {
    cd a = s.param("a"), b = s.param("b"), d = s.param("d");
    cd q = std::sqrt(b * d);
    cd ratio = std::sqrt(d / b);
    return from_rlist(
        [=](cd u) {
          RList r{};
          r[1] = 1.0; r[5] = 1.0;
          r[2] = ratio * std::tan(q * u);
          r[3] = b / d * r[2];
          r[6] = std::exp(a * u) / std::cos(q * u);
          r[9] = std::exp(-2.0 * a * u) * r[6];
          return r;
        },
        lattice_poles({{kPi / 2.0 / q, kPi / q}}), "cos(sqrt(bd) u) = 0");
  }
  cd a = s.param("a"), b = s.param("b"), c = s.param("c"), d = s.param("d");
  cd sin2 = (a + c) * (a + c) / (4.0 * b * d);
  cd eta = std::asin(std::sqrt(sin2));
  cd g0 = acot(std::tan(eta));
  cd slope = 0.5 * (a + c) / std::tan(eta);
  return from_rlist(
      [=](cd u) {
        cd g = g0 - slope * u;
        RList r{};
        r[1] = 1.0; r[5] = 1.0;
        r[2] = (a + c) / (2.0 * b) * (1.0 / std::tan(eta) / std::tan(g) - 1.0);
        r[3] = 2.0 * b / (a + c) * std::sin(eta) / std::sin(g) * std::cos(g + eta);
        r[6] = std::exp(0.5 * u * (a - c)) * std::cos(eta) / std::sin(g);
        r[9] = std::exp(-u * (a - c)) * r[6];
        return r;
      },
      lattice_poles({{g0 / slope, -kPi / slope}}), "sin g(u) = 0");
}

RMatrixFn model2(const ModelSpec& s) {
  const Branch br = s.branch.value_or(Branch::Generic);
  if (br == Branch::BZero) {
    cd a = s.param("a"), c = s.param("c"), d = s.param("d");
    return from_rlist(
        [=](cd u) {
          RList r{};
          r[1] = 1.0;
          r[2] = d * expm1_over(a + c, u);
          r[5] = std::exp((a + c) * u);
          r[6] = std::exp(a * u); r[9] = std::exp(c * u);
          return r;
        },
        no_poles(), "none");
  }
  cd a = s.param("a"), b = s.param("b"), c = s.param("c"), d = s.param("d");
  cd cosh2 = (a + c) * (a + c) / (4.0 * b * d);
  cd eta = std::acosh(std::sqrt(cosh2));
  cd slope = 0.5 * (a + c) * std::tanh(eta);
  return from_rlist(
      [=](cd u) {
        cd g = 1.0 / std::sinh(eta - slope * u);
        cd h = std::sinh(slope * u);
        RList r{};
        r[1] = 1.0;
        r[2] = (a + c) / (2.0 * b) * g * h / std::cosh(eta);
        r[3] = 2.0 * b / (a + c) * g * h * std::cosh(eta);
        r[5] = g * std::sinh(slope * u + eta);
        r[6] = std::exp(0.5 * u * (a - c)) * g * std::sinh(eta);
        r[9] = std::exp(0.5 * u * (c - a)) * g * std::sinh(eta);
        return r;
      },
      lattice_poles({{eta / slope, -kI * kPi / slope}}), "sinh(eta - u (a+c) tanh(eta) / 2) = 0");
}

RMatrixFn models4to7(const ModelSpec& s) {
  const int m = s.model;
  cd rho = s.param("rho"), a = s.param("a"), phi = s.param("phi");
  return from_rlist(
      [=](cd u) {
        RList r{};
        cd den = 1.0 / (1.0 - u * rho);
        cd e7 = std::exp(u * (a - rho)) * den, e10 = std::exp(u * (rho - a)) * den;
        r[6] = e7; r[9] = e10;
        if (m == 6) {
          cd r5 = u * rho * den;
          r[1] = 1.0; r[5] = den; r[4] = r5;
          r[2] = std::exp(phi) * r5; r[3] = std::exp(-phi) * r5;
          return r;
        }
        cd r1 = -u * rho * den;
        r[0] = r1; r[1] = den;
        r[2] = -std::exp(phi) * r1; r[3] = -std::exp(-phi) * r1;
        if (m == 4) { r[5] = 1.0; }
        if (m == 5) { r[4] = r1; r[5] = den; }
        if (m == 7) { r[4] = -r1; r[5] = den; }
        return r;
      },
      point_poles({1.0 / rho}), "u = 1/rho");
}

RMatrixFn models8to12(const ModelSpec& s) {
  const int m = s.model;
  cd rho = s.param("rho"), phi = s.param("phi");
  cd ep = std::exp(phi), em = std::exp(-phi);
  const double s3 = std::sqrt(3.0);
  switch (m) {
    case 8:
      return from_rlist(
          [=](cd u) {
            RList r{};
            cd r1 = -std::tan(u * rho);
            r[0] = r1; r[4] = -r1; r[1] = 1.0 - r1; r[5] = 1.0 + r1;
            r[6] = 1.0; r[9] = 1.0;
            r[7] = ep * r1; r[8] = -em * r1;
            return r;
          },
          lattice_poles({{kPi / 2.0 / rho, kPi / rho}}), "cos(rho u) = 0");
    case 9: {
      cd shift = std::log(2.0 - s3);
      return from_rlist(
          [=](cd u) {
            RList r{};
            cd r1 = 2.0 + s3 / std::tanh(s3 * rho * u + shift);
            r[0] = r1; r[4] = r1; r[1] = 1.0 - r1; r[5] = 1.0 - r1;
            r[6] = 1.0; r[9] = 1.0;
            r[7] = -ep * r1; r[8] = -em * r1;
            return r;
          },
          lattice_poles({{-shift / (s3 * rho), kI * kPi / (s3 * rho)}}),
          "sinh(sqrt3 rho u + log(2 - sqrt3)) = 0");
    }
    case 10:
      return from_rlist(
          [=](cd u) {
            RList r{};
            cd e = std::exp(1.5 * rho * u);
            cd r1 = 2.0 * (e - 1.0) / (e - 4.0);
            r[0] = r1; r[4] = r1;
            r[1] = -(e + 2.0) / (e - 4.0); r[5] = r[1];
            r[6] = std::exp(-0.75 * rho * u); r[9] = r[6];
            r[7] = -0.5 * std::exp(0.75 * rho * u + phi) * r1;
            r[8] = std::exp(2.0 * phi) * r[7];
            return r;
          },
          lattice_poles({{std::log(4.0) / (1.5 * rho), 2.0 * kPi * kI / (1.5 * rho)}}),
          "exp(3 rho u / 2) = 4");
    case 11:
      return from_rlist(
          [=](cd u) {
            RList r{};
            cd x = rho * u;
            cd f = 1.0 / ((x - 2.0) * (3.0 * x - 2.0));
            r[0] = x * (3.0 * x - 4.0) * f; r[4] = r[0];
            r[1] = 4.0 * (1.0 - x) * f; r[5] = r[1];
            r[6] = -2.0 / (3.0 * x - 2.0); r[9] = r[6];
            r[2] = -1.5 * x * r[6]; r[3] = r[2];
            r[7] = 2.0 * x * ep * f;
            r[8] = std::exp(-2.0 * phi) * r[7];
            return r;
          },
          point_poles({2.0 / rho, 2.0 / (3.0 * rho)}), "u = 2/rho, u = 2/(3 rho)");
    case 12:
      return from_rlist(
          [=](cd u) {
            RList r{};
            cd t = std::tanh(u * rho), sc = 1.0 / std::cosh(u * rho);
            r[3] = t; r[2] = -t;
            r[6] = sc; r[9] = sc;
            r[0] = t * t; r[4] = t * t;
            r[1] = sc * sc; r[5] = sc * sc;
            r[7] = ep * t * sc; r[8] = -em * t * sc;
            return r;
          },
          lattice_poles({{kI * kPi / 2.0 / rho, kI * kPi / rho}}), "cosh(rho u) = 0");
  }
  throw CatalogError("unreachable");
}

RMatrixFn model13(const ModelSpec& s) {
  cd A = s.param("A"), B = s.param("B"), C = s.param("C");
  MatrixC I = identity(16), P = permutation_operator(4);
  MatrixC K = trace_operator_so4(), Eps = epsilon_operator_so4();
  // The epsilon coefficient enters with the opposite sign to the density.
  return RMatrixFn{
      [=](cd u) -> MatrixC {
        cd pre = (1.0 + A * u) / (1.0 - B * u);
        return pre * (u * (u * (B * B - C * C) - B) * I + (1.0 - B * u) * P + u * B * K -
                      u * C * Eps);
      },
      point_poles({1.0 / B}), "u = 1/B"};
}

RMatrixFn model14(const ModelSpec& s) {
  cd A = s.param("A"), B = s.param("B");
  const double s3 = std::sqrt(3.0);
  MatrixC P = permutation_operator(4), K = trace_operator_so4();
  // t = 1/x with x = sqrt3 coth(sqrt3 B u); regular at u = 0.
  cd tpole = std::atanh(cd(s3)) / (s3 * B);
  return RMatrixFn{
      [=](cd u) -> MatrixC {
        cd t = std::tanh(s3 * B * u) / s3;
        return (1.0 + A * u) * ((1.0 - 2.0 * t) / (1.0 - t) * P + t / (1.0 - t) * K);
      },
      lattice_poles({{kI * kPi / 2.0 / (s3 * B), kI * kPi / (s3 * B)},
                     {tpole, kI * kPi / (s3 * B)}}),
      "cosh(sqrt3 B u) = 0 or x(u) = 1"};
}

RMatrixFn model18(const ModelSpec& s) {
  if (!s.has("theta"))
    throw CatalogError("model 18: the R-matrix is parametrised by theta and a2");
  cd theta = s.param("theta"), a2 = s.param("a2");
  cd ct = std::cos(theta);
  return RMatrixFn{
      [=](cd u) { return r18_layout(r18_functions(theta, a2, u)); },
      lattice_poles({{(kPi / 2.0 - theta) / ct, kPi / ct}}), "cos(theta + u cos theta) = 0"};
}

}  // namespace

MatrixC RMatrixFn::operator()(cd u) const {
  if (near_pole(u))
    throw PoleError("R-matrix evaluated at a declared pole (" + poles + ")");
  return eval(u);
}

RMatrixFn constant_r(const MatrixC& r) {
  return RMatrixFn{[r](cd) { return r; }, no_poles(), "none"};
}

MatrixC r_template(const std::array<cd, 10>& r) {
  const cd r1 = r[0], r2 = r[1], r3 = r[2], r4 = r[3], r5 = r[4], r6 = r[5], r7 = r[6],
           r8 = r[7], r9 = r[8], r10 = r[9];
  MatrixC m = MatrixC::Zero(16, 16);
  m(0, 0) = r1 + r2;
  m(1, 1) = r1; m(1, 4) = r2; m(1, 11) = -r8; m(1, 14) = r8;
  m(2, 2) = r4; m(2, 8) = r10;
  m(3, 3) = r4; m(3, 12) = r10;
  m(4, 1) = r2; m(4, 4) = r1; m(4, 11) = r8; m(4, 14) = -r8;
  m(5, 5) = r1 + r2;
  m(6, 6) = r4; m(6, 9) = r10;
  m(7, 7) = r4; m(7, 13) = r10;
  m(8, 2) = r7; m(8, 8) = r3;
  m(9, 6) = r7; m(9, 9) = r3;
  m(10, 10) = r5 + r6;
  m(11, 1) = -r9; m(11, 4) = r9; m(11, 11) = r5; m(11, 14) = r6;
  m(12, 3) = r7; m(12, 12) = r3;
  m(13, 7) = r7; m(13, 13) = r3;
  m(14, 1) = r9; m(14, 4) = -r9; m(14, 11) = r6; m(14, 14) = r5;
  m(15, 15) = r5 + r6;
  return m;
}

R18Functions r18_functions(cd theta, cd a2, cd u) {
  R18Functions r;
  cd ct = std::cos(theta), st = std::sin(theta);
  r.r1 = std::cos(theta + u * ct);
  r.r3 = std::sin(u * ct);
  r.r4 = ct * std::cos(u * ct);
  r.r5 = -ct * std::tan(theta + u * ct) * r.r3;
  r.r7 = ct * std::exp(u * (a2 + st));
  r.s7 = ct * std::exp(-u * (a2 + st));
  r.r2 = r.r3 * r.r3 / r.r1;
  r.r6 = r.r7 * r.r7 / r.r1;
  r.r8 = r.r7 / r.r1 * r.r3;
  r.r9 = r.s7 / r.r1 * r.r3;
  r.r10 = st * r.r3;
  r.r11 = 0.25 *
          (std::cos(2.0 * theta) - std::cos(2.0 * u * ct) + std::cos(2.0 * (theta + u * ct)) + 3.0) /
          r.r1;
  r.r12 = r.s7 * r.s7 / r.r1;
  r.f = (2.0 * a2 * u + 1.0) / std::cos(theta + u * ct);
  return r;
}

MatrixC r18_layout(const R18Functions& r) {
  MatrixC m = MatrixC::Zero(16, 16);
  m(0, 0) = r.r1;
  m(1, 1) = r.r2; m(1, 4) = r.r6; m(1, 11) = -r.r8; m(1, 14) = r.r8;
  m(2, 2) = r.r3; m(2, 8) = r.r7;
  m(3, 3) = r.r3; m(3, 12) = r.r7;
  m(4, 1) = r.r12; m(4, 4) = r.r2; m(4, 11) = -r.r9; m(4, 14) = r.r9;
  m(5, 5) = r.r1;
  m(6, 6) = -r.r3; m(6, 9) = r.s7;
  m(7, 7) = -r.r3; m(7, 13) = r.s7;
  m(8, 2) = r.s7; m(8, 8) = r.r3;
  m(9, 6) = r.r7; m(9, 9) = -r.r3;
  m(10, 10) = r.r4; m(10, 15) = r.r10;
  m(11, 1) = r.r9; m(11, 4) = r.r8; m(11, 11) = r.r5; m(11, 14) = r.r11;
  m(12, 3) = r.s7; m(12, 12) = r.r3;
  m(13, 7) = r.r7; m(13, 13) = -r.r3;
  m(14, 1) = -r.r9; m(14, 4) = -r.r8; m(14, 11) = r.r11; m(14, 14) = r.r5;
  m(15, 10) = r.r10; m(15, 15) = r.r4;
  return r.f * m;
}

RMatrixFn build_r_matrix(const ModelSpec& spec) {
  validate(spec);
  const int m = spec.model;
  if (m == 1) return model1(spec);
  if (m == 2) return model2(spec);
  if (m == 3) {
    cd a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
    return from_rlist(
        [=](cd u) {
          RList r{};
          r[1] = 1.0; r[5] = std::exp(a * u); r[6] = std::exp(b * u); r[9] = std::exp(c * u);
          return r;
        },
        no_poles(), "none");
  }
  if (m >= 4 && m <= 7) return models4to7(spec);
  if (m >= 8 && m <= 12) return models8to12(spec);
  if (m == 13) return model13(spec);
  if (m == 14) return model14(spec);
  if (m == 18) return model18(spec);
  throw CatalogError("model " + std::to_string(m) + " has no R-matrix in the catalog");
}

}  // namespace yangkit
