#include "markov/verify.hpp"

#include <functional>

#include "markov/cohnwords.hpp"
#include "markov/fenceposet.hpp"
#include "markov/matrix2.hpp"
#include "markov/signseq.hpp"
#include "markov/words.hpp"

namespace markov {

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed && !c.conjecture) return false;
  }
  return true;
}

std::optional<CheckResult> VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed && !c.conjecture) return c;
  }
  return std::nullopt;
}

namespace {

// A check body returns an empty string on success, else a description.
using CheckBody = std::function<std::string()>;

CheckResult run_check(std::string name, const CheckBody& body, bool conjecture = false) {
  CheckResult r{std::move(name), false, {}, conjecture};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::string mismatch(const std::string& lhs_name, const std::string& lhs,
                     const std::string& rhs_name, const std::string& rhs) {
  if (lhs == rhs) return {};
  return lhs_name + " = " + lhs + " but " + rhs_name + " = " + rhs;
}

}  // namespace

VerifyReport verify_slope(const ExtRational& t, const GMParams& params) {
  require_interior(t, "verify");
  VerifyReport report{t, params, {}};
  auto& out = report.checks;

  const FreeWord omega = omega_geometric(t);

  out.push_back(run_check("omega_reduced_as_emitted", [&] {
    return omega.is_reduced() ? std::string{} : "omega_t = " + omega.str() + " is not reduced";
  }));
  out.push_back(run_check("omega_geometric_eq_tree", [&] {
    return mismatch("geometric", omega.str(), "tree", reduce(omega_tree(t)).str());
  }));
  out.push_back(run_check("omega_symmetric_decomposition", [&] {
    const auto d = symmetric_decompose(omega);
    if (d.center.exp != 1) return std::string("central letter is inverted");
    const FreeWord rebuilt = juxtapose(juxtapose(d.prefix, FreeWord({d.center})), inverse(d.prefix));
    return mismatch("u a u^-1", rebuilt.str(), "omega_t", omega.str());
  }));
  out.push_back(run_check("omega_neighbor_relation", [&] {
    const FareyTriple f = farey_triple(t);
    const FreeWord xyz({{Gen::X, 1}, {Gen::Y, 1}, {Gen::Z, 1}});
    const FreeWord algebraic =
        reduce(juxtapose(juxtapose(inverse(omega_geometric(f.left)), xyz),
                         inverse(omega_geometric(f.right))));
    if (auto m = mismatch("omega_r^-1 xyz omega_s^-1", algebraic.str(), "omega_t", omega.str());
        !m.empty()) {
      return m;
    }
    if (t == ExtRational::one()) return std::string{};
    return mismatch("neighbor form", omega_from_neighbors(t).str(), "omega_t", omega.str());
  }));
  out.push_back(run_check("omega_completed_geometric_eq_algebraic", [&] {
    return mismatch("geometric", omega_completed(t, CompletionMode::Geometric).str(), "xyz omega^-1",
                    omega_completed(t, CompletionMode::Algebraic).str());
  }));

  const RunLengthSequence gm_seq = gm_sequence(t, params);
  const LabeledTriple vertex = gm_vertex(t, params);

  out.push_back(run_check("gm_vertex_solves_equation", [&] {
    const auto x = vertex.positioned();
    return gm_verify(x[0], x[1], x[2], params) ? std::string{} : "vertex does not solve the GM equation";
  }));
  out.push_back(run_check("ideal_count_eq_gm_number", [&] {
    return mismatch("N(s°)", ideal_count(gm_seq.runs).get_str(), "m_t", vertex.mid().m.get_str());
  }));

  const Mat2 m_t = evaluate(omega, params);
  out.push_back(run_check("monodromy_entry_formula", [&] {
    return mismatch("M_t", m_t.str(), "entry formula", monodromy_from_entries(t, params).str());
  }));
  out.push_back(run_check("monodromy_ideal_form", [&] {
    return mismatch("M_t", m_t.str(), "ideal form", monodromy_from_ideals(gm_seq).str());
  }));

  const Generators g = generators(params);
  out.push_back(run_check("xyz_product", [&] {
    const Mat2 expected{-1, params.K(), 0, -1};
    return mismatch("XYZ", (g.X * g.Y * g.Z).str(), "[-1,K;0,-1]", expected.str());
  }));

  const Mat2 c_rec = gc_recursive(t, params);
  out.push_back(run_check("determinants", [&] {
    if (m_t.det() != 1) return "det M_t = " + m_t.det().get_str();
    if (c_rec.det() != 1) return "det C_t = " + c_rec.det().get_str();
    return std::string{};
  }));
  out.push_back(run_check("completed_matrix_eq_xyz_times_inverse", [&] {
    return mismatch("M̄_t", completed_matrix(t, params).str(), "XYZ M_t^-1",
                    (g.X * g.Y * g.Z * m_t.adjugate()).str());
  }));
  out.push_back(run_check("cohn_matrix_five_way", [&] {
    const auto s = strongly_admissible(t, params);
    const std::pair<const char*, Mat2> routes[] = {
        {"explicit", gc_explicit(t, params)},
        {"F_S", fs_product(s.runs)},
        {"sign-corrected completed", gc_from_completed(t, params)},
        {"ideal matrix", ideal_matrix(s.runs)},
    };
    for (const auto& [name, mat] : routes) {
      if (auto m = mismatch("recursive", c_rec.str(), name, mat.str()); !m.empty()) return m;
    }
    return std::string{};
  }));

  out.push_back(run_check("cohn_word_agreement", [&] {
    const CohnWord geo = christoffel(t);
    if (auto m = mismatch("christoffel", geo.letters, "tree", cohn_tree(t).letters); !m.empty()) {
      return m;
    }
    if (t == ExtRational::one()) return std::string{};
    if (auto m = mismatch("christoffel", geo.letters, "from omega", cohn_from_omega(omega, t).letters);
        !m.empty()) {
      return m;
    }
    const std::string interior = geo.letters.substr(1, geo.letters.size() - 2);
    return is_palindrome(interior) ? std::string{} : "interior '" + interior + "' is not a palindrome";
  }));

  out.push_back(run_check(
      "characteristic_eq_cf_denominator",
      [&] {
        return mismatch("u_t", m_t.e11.get_str(), "cf denominator of s°",
                        cf_numden(gm_seq.runs).second.get_str());
      },
      /*conjecture=*/true));

  return report;
}

}  // namespace markov
