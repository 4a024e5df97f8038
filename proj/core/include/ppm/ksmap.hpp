#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppm/amodel.hpp"
#include "ppm/floer.hpp"
#include "ppm/koszul.hpp"

namespace ppm {

// A linear constraint: the coefficient of `cf` in ks(sc) equals `value`.
struct KSPin {
  Key sc;
  Key cf;
  CycNum value;
};

struct KSSeed {
  TwistedPtr sc;
  TwistedPtr cf;
  Character chi;
  std::vector<Key> generators;  // SC generators covered by the map
  std::vector<KSPin> pins;
};

// Pinned entries: ks(e) = e_L, ks(e_a t_a) = x_a e_L, ks(f1) = -xX + yY,
// ks(f2) = -yY + zZ untwisted; ks(e x chi) = chi(g_a^-1) e_L, the x_a^n e_L
// coefficient of each e-tower, the f_L coefficients of f1, f2 and of the
// f-towers of fixed ends, and leading coefficients of untwisted f-towers.
// Every other coefficient is an unknown.
KSSeed seed_ks(TwistedPtr sc, TwistedPtr cf, const Character& chi, int cutoff);

struct KSMap {
  TwistedPtr sc;
  TwistedPtr cf;
  Character chi;
  std::map<Key, Chain> images;  // SC generator -> CF cochain
  int free_parameters = 0;      // dimension of the affine solution family
  Chain apply(const Chain& sc_chain) const;
  Chain image(const std::string& sc_gen) const;
};

// Solves ks d = d ks with the pins, block by block (blocks are connected
// components of the SC differential). Picks the solution supported on the
// earliest CF basis elements. Throws Inconsistent if the pins admit no chain map.
KSMap solve_unknowns(const KSSeed& seed);

// Builds SC (windings for the cutoff) and CF complexes, seeds and solves.
KSMap solve_ks(const CoverSpec& spec, const Character& chi, int cutoff,
               Convention conv = Convention::AppendixA);

struct KSDegree {
  int degree = 0;
  bool chain_map = true;
  int sc_dim = 0, cf_dim = 0, rank = 0;
  int sc_inv = 0, cf_inv = 0, rank_inv = 0;
  bool iso() const { return sc_dim == cf_dim && rank == sc_dim; }
  bool iso_inv() const { return sc_inv == cf_inv && rank_inv == sc_inv; }
};

struct KSReport {
  std::string chi;
  std::vector<KSDegree> degrees;
  bool weight_homogeneous = true;  // ks commutes with the sector G-action
  bool unit_preserved = true;      // ks(e) = e_L for chi = 1
  bool ok = true;
  std::string first_failure;
};

KSReport verify_chain_map_quasi_iso(const KSMap& m, int cutoff);

// Constants of ks(f1 x chi) = chi(g_a^-1) c_x xX + c_y yY + c_z zZ on the
// Z/n cover with g_beta = -g_alpha, g_gamma = 0, for a nontrivial chi.
struct KSConstants {
  CycNum cx, cy, cz, cf;  // cf: the f_L coefficient
};
KSConstants ks_constants(int n);

// tau(ks(u)) for a log generator in the untwisted sector of the trivial cover.
Chain tau_ks(const KSMap& untwisted, const LogGenerator& g);

struct RingMatchRow {
  std::string u, v;
  std::string star;       // u * v on the A-side
  std::string lhs, rhs;   // tau ks(u * v) and tau ks(u) cup tau ks(v), normal forms
  bool match = false;
  bool module_match = true;  // via module_action when one factor is polynomial
};
struct RingMatchReport {
  std::vector<RingMatchRow> rows;
  int sign_f1 = 0;  // tau ks(f1) = sign_f1 * lambda_z as classes
  int sign_f2 = 0;  // tau ks(f2) = sign_f2 * lambda_x as classes
  bool ok = true;
};
RingMatchReport ring_match(int cutoff);

// Graded comparison of SH*(X) (sum of invariant SC sectors), the invariant
// CF sectors, the upstairs SC complex and Kos(W, G^).
struct ModuleComparison {
  std::vector<int> sh, cf, upstairs, kos;
  bool ok = false;
};
ModuleComparison compare_invariant_parts(const CoverSpec& spec, int cutoff);

}  // namespace ppm
