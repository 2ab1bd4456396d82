// Copyright 2026 The clonekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clonekit/qkd.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "clonekit/pcqcm.hpp"

namespace clonekit {
namespace {

constexpr double kBisectWidth = 1e-10;

double info(double p) { return 1.0 - binary_entropy(p); }

CVectord x_state(int sign) {
  const double r = 1.0 / std::sqrt(2.0);
  CVectord v(2);
  v << r, sign * r;
  return v;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  auto done = [](double a, double b) { return std::abs(b - a) < kBisectWidth; };
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, done);
  return (a + b) / 2.0;
}

// (<b|_B (x) I) |gamma>, with Bob as the most significant qubit.
CVectord bob_project(const CVectord& gamma, const CVectord& b) {
  const Eigen::Index rest = gamma.size() / 2;
  return std::conj(b(0)) * gamma.head(rest) + std::conj(b(1)) * gamma.tail(rest);
}

CMatrixd eve_given_bob(const std::vector<CVectord>& gammas, const CVectord& b) {
  CMatrixd sum;
  for (const auto& g : gammas) {
    const CVectord e = bob_project(g, b);
    const CMatrixd term = 0.5 * e * e.adjoint();
    sum = sum.size() == 0 ? term : CMatrixd(sum + term);
  }
  return sum;
}

CMatrixd eve_marginal(const CVectord& gamma, const HilbertDims& dims) {
  std::vector<int> eve;
  for (int k = 1; k < static_cast<int>(dims.size()); ++k) eve.push_back(k);
  return partial_trace<double>(gamma * gamma.adjoint(), dims, eve);
}

// Fills chi_ae and chi_be from Alice's two equiprobable inputs.
void fill_chi(AttackOutcome& out, const std::vector<CVectord>& gammas, const HilbertDims& dims) {
  out.chi_ae = holevo_chi({{0.5, eve_marginal(gammas[0], dims)}, {0.5, eve_marginal(gammas[1], dims)}});
  std::vector<std::pair<double, CMatrixd>> bob;
  for (int sign : {1, -1}) {
    const CMatrixd s = eve_given_bob(gammas, x_state(sign));
    const double p = s.trace().real();
    bob.emplace_back(p, s / p);
  }
  out.chi_be = holevo_chi(bob);
}

CMatrixd positive_projector(const CMatrixd& delta) {
  Eigen::SelfAdjointEigenSolver<CMatrixd> es(delta);
  CMatrixd p = CMatrixd::Zero(delta.rows(), delta.cols());
  for (Eigen::Index i = 0; i < delta.rows(); ++i)
    if (es.eigenvalues()(i) > 0) p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return p;
}

double expectation(const CVectord& v, const CMatrixd& op) { return v.dot(op * v).real(); }

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
  double h = 0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

double holevo_chi(const std::vector<std::pair<double, CMatrixd>>& ensemble) {
  if (ensemble.empty()) throw std::invalid_argument("holevo_chi: empty ensemble");
  CMatrixd avg = CMatrixd::Zero(ensemble[0].second.rows(), ensemble[0].second.cols());
  double mixed = 0;
  for (const auto& [p, rho] : ensemble) {
    avg += p * rho;
    mixed += p * vn_entropy<double>(rho);
  }
  return std::max(0.0, vn_entropy<double>(avg) - mixed);
}

double helstrom_probability(const CMatrixd& rho0, const CMatrixd& rho1, double p0) {
  Eigen::SelfAdjointEigenSolver<CMatrixd> es(p0 * rho0 - (1.0 - p0) * rho1, Eigen::EigenvaluesOnly);
  return 0.5 * (1.0 + es.eigenvalues().cwiseAbs().sum());
}

AttackOutcome bb84_no_ancilla(double eta) {
  const QuantumChanneld ch = ng_channel(eta);
  const HilbertDims dims{2, 2};
  AttackOutcome out;
  out.eta = eta;
  std::vector<CVectord> gammas;
  for (int sign : {1, -1}) {
    const CVectord a = x_state(sign);
    const CVectord gamma = ch.kraus()[0] * a;
    gammas.push_back(gamma);
    const CMatrixd rho = gamma * gamma.adjoint();
    out.f_ab += 0.5 * expectation(a, partial_trace<double>(rho, dims, {0}));
    out.f_ae += 0.5 * expectation(a, partial_trace<double>(rho, dims, {1}));
    for (int b : {1, -1}) out.p_be += 0.5 * std::norm(kron<double>(x_state(b), x_state(b)).col(0).dot(gamma));
  }
  out.i_ab = info(out.f_ab);
  out.i_ae = info(out.f_ae);
  out.i_be = info(out.p_be);
  fill_chi(out, gammas, dims);
  return out;
}

CMatrixd bell_relabelling() {
  CMatrixd r = CMatrixd::Zero(4, 4);
  r.row(0b00) = Bell<double>::phi_plus().amplitudes().adjoint();
  r.row(0b10) = Bell<double>::psi_plus().amplitudes().adjoint();
  r.row(0b11) = Bell<double>::phi_minus().amplitudes().adjoint();
  r.row(0b01) = Bell<double>::psi_minus().amplitudes().adjoint();
  return r;
}

namespace {

std::vector<CVectord> relabelled_gammas(double eta) {
  const QuantumChanneld ch = pc_ancilla_channel(eta);
  const CMatrixd r = kron<double>(CMatrixd::Identity(2, 2), bell_relabelling());
  std::vector<CVectord> out;
  for (int sign : {1, -1}) out.push_back(r * (ch.kraus()[0] * x_state(sign)));
  return out;
}

}  // namespace

RelabelCheck bb84_relabel_check(double eta) {
  const double F = (1.0 + std::cos(eta)) / 2.0;
  const double D = 1.0 - F;
  auto chi = [&](int sign) {
    CVectord v(2);
    v << std::sqrt(F), sign * std::sqrt(D);
    return v;
  };
  CVectord e0 = CVectord::Zero(2), e1 = CVectord::Zero(2);
  e0(0) = 1;
  e1(1) = 1;
  const auto gammas = relabelled_gammas(eta);
  RelabelCheck rc;
  for (int k = 0; k < 2; ++k) {
    const int sign = k == 0 ? 1 : -1;
    const CVectord expected = std::sqrt(F) * kron<double>(kron<double>(x_state(sign), chi(sign)), e0).col(0) -
                              sign * std::sqrt(D) * kron<double>(kron<double>(x_state(-sign), chi(-sign)), e1).col(0);
    rc.residual = std::max(rc.residual, (gammas[static_cast<std::size_t>(k)] - expected).cwiseAbs().maxCoeff());
  }
  // Bob on |+-x>, E2 on |0> leaves sqrt(F)|chi+->.
  const CMatrixd pick = kron<double>(CMatrixd::Identity(2, 2), CMatrixd(e0.adjoint()));
  const CVectord cp = pick * bob_project(gammas[0], x_state(1));
  const CVectord cm = pick * bob_project(gammas[1], x_state(-1));
  rc.chi_overlap = std::abs(cp.normalized().dot(cm.normalized()));
  return rc;
}

AttackOutcome bb84_with_ancilla(double eta) {
  const auto gammas = relabelled_gammas(eta);
  const HilbertDims dims{2, 2, 2};
  AttackOutcome out;
  out.eta = eta;
  for (int k = 0; k < 2; ++k) {
    const int sign = k == 0 ? 1 : -1;
    const CMatrixd rho = gammas[static_cast<std::size_t>(k)] * gammas[static_cast<std::size_t>(k)].adjoint();
    out.f_ab += 0.5 * expectation(x_state(sign), partial_trace<double>(rho, dims, {0}));
  }

  // Eve reads E2 = k, then runs the Helstrom measurement on E1 for Alice's bit.
  for (int k = 0; k < 2; ++k) {
    CVectord ek = CVectord::Zero(2);
    ek(k) = 1;
    const CMatrixd read_e2 = kron<double>(CMatrixd::Identity(4, 4), CMatrixd(ek.adjoint()));
    std::vector<CVectord> cond;  // (Bob, E1) given Alice's bit and E2 = k
    for (const auto& g : gammas) cond.push_back(read_e2 * g);
    const HilbertDims be{2, 2};
    const CMatrixd tau_plus = partial_trace<double>(cond[0] * cond[0].adjoint(), be, {1});
    const CMatrixd tau_minus = partial_trace<double>(cond[1] * cond[1].adjoint(), be, {1});
    const CMatrixd guess_plus = positive_projector(tau_plus - tau_minus);
    const CMatrixd guess_minus = CMatrixd::Identity(2, 2) - guess_plus;
    for (int a = 0; a < 2; ++a) {
      for (int g = 0; g < 2; ++g) {
        const CMatrixd& proj = g == 0 ? guess_plus : guess_minus;
        // Eve's guess of Bob's bit flips when E2 = 1.
        const int bob_guess = g ^ k;
        for (int b = 0; b < 2; ++b) {
          const CVectord bv = x_state(b == 0 ? 1 : -1);
          const double p = 0.5 * expectation(cond[static_cast<std::size_t>(a)],
                                             kron<double>(bv * bv.adjoint(), proj));
          if (g == a) out.f_ae += p;
          if (bob_guess == b) out.p_be += p;
        }
      }
    }
  }
  out.i_ab = info(out.f_ab);
  out.i_ae = info(out.f_ae);
  out.i_be = info(out.p_be);
  fill_chi(out, gammas, dims);
  return out;
}

AttackOutcome bb84_closed_form(double eta, bool ancilla) {
  if (!(eta >= 0.0 && eta <= std::numbers::pi / 2)) throw std::invalid_argument("eta must lie in [0, pi/2]");
  AttackOutcome out;
  out.eta = eta;
  out.f_ab = (1.0 + std::cos(eta)) / 2.0;
  out.f_ae = (1.0 + std::sin(eta)) / 2.0;
  out.p_be = ancilla ? out.f_ae : (1.0 + 0.5 * std::sin(2.0 * eta)) / 2.0;
  out.i_ab = info(out.f_ab);
  out.i_ae = info(out.f_ae);
  out.i_be = info(out.p_be);
  if (ancilla) {
    out.chi_ae = binary_entropy(out.f_ab);
    out.chi_be = binary_entropy(out.f_ab);
  }
  return out;
}

double key_rate(const AttackOutcome& outcome, AttackMode mode) {
  if (mode == AttackMode::incoherent) return outcome.i_ab - std::min(outcome.i_ae, outcome.i_be);
  if (!outcome.chi_ae || !outcome.chi_be) throw std::invalid_argument("key_rate: collective mode needs chi values");
  return outcome.i_ab - std::min(*outcome.chi_ae, *outcome.chi_be);
}

double critical_disturbance(AttackMode mode) {
  if (mode == AttackMode::incoherent) {
    const double eta = bisect(
        [](double e) {
          const AttackOutcome o = bb84_closed_form(e, true);
          return o.f_ab - o.f_ae;
        },
        0.0, std::numbers::pi / 2);
    return 1.0 - bb84_closed_form(eta, true).f_ae;
  }
  return bisect([](double D) { return 1.0 - 2.0 * binary_entropy(D); }, 1e-6, 0.5 - 1e-6);
}

double collective_threshold_from_states() {
  const double eta = bisect([](double e) { return key_rate(bb84_with_ancilla(e), AttackMode::collective); }, 0.01,
                            std::numbers::pi / 4);
  return (1.0 - std::cos(eta)) / 2.0;
}

}  // namespace clonekit
