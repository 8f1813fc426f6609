// Acceptance gate: every release-blocking property of the library, pinned to
// exact values.  Each numbered criterion prints exactly one PASS/FAIL line;
// the process exits nonzero if any line fails.

#include "deriva/report.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace deriva;

namespace {

using Clock = std::chrono::steady_clock;
using Key = std::tuple<Family, int, unsigned long>;

struct Cached {
    VerificationReport rep;
    double seconds = 0.0;
};

std::map<Key, Cached> run_grid() {
    std::map<Key, Cached> cache;
    for (const FamilySpec &spec : grid_cells(default_grid())) {
        auto t0 = Clock::now();
        VerificationReport rep = verify_family(spec, true);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        cache.emplace(Key{spec.family, spec.n, spec.characteristic}, Cached{std::move(rep), secs});
    }
    return cache;
}

bool check_passed(const VerificationReport &rep, const std::string &name) {
    for (const CheckResult &c : rep.checks)
        if (c.name == name)
            return c.pass;
    return false;
}

bool note_mentions(const VerificationReport &rep, const std::string &needle) {
    for (const std::string &n : rep.variant_notes)
        if (n.find(needle) != std::string::npos)
            return true;
    return false;
}

struct Gate {
    int failed = 0;

    void line(int idx, const std::string &label, bool ok, const std::string &why = "") {
        std::cout << (ok ? "PASS" : "FAIL") << " " << idx << ": " << label;
        if (!ok && !why.empty())
            std::cout << " — " << why;
        std::cout << "\n";
        if (!ok)
            ++failed;
    }
};

std::string cell_name(Family fam, int n, unsigned long p) {
    std::ostringstream os;
    os << family_name(fam) << " n=" << n << " char=" << p;
    return os.str();
}

}  // namespace

int main() {
    std::map<Key, Cached> cache = run_grid();
    Gate gate;
    std::ostringstream why;

    auto cell = [&](Family fam, int n, unsigned long p) -> const Cached & {
        return cache.at(Key{fam, n, p});
    };
    auto expect_der = [&](Family fam, int n, unsigned long p, int want, bool &ok) {
        const Cached &c = cell(fam, n, p);
        if (c.rep.der_computed != want || !c.rep.pass) {
            ok = false;
            why << "[" << cell_name(fam, n, p) << " der " << c.rep.der_computed << " wanted "
                << want << (c.rep.pass ? "" : ", cell FAIL") << "] ";
        }
        if (c.seconds >= 5.0) {
            ok = false;
            why << "[" << cell_name(fam, n, p) << " took " << c.seconds << "s] ";
        }
    };

    // 1. dihedral dimension table
    {
        bool ok = true;
        why.str("");
        const int q_dims[] = {3, 3, 6, 6, 9, 9, 12, 12};
        for (int n = 3; n <= 10; ++n)
            expect_der(Family::dihedral, n, 0, q_dims[n - 3], ok);
        expect_der(Family::dihedral, 3, 3, 4, ok);
        expect_der(Family::dihedral, 6, 3, 8, ok);
        expect_der(Family::dihedral, 9, 3, 16, ok);
        expect_der(Family::dihedral, 5, 5, 8, ok);
        expect_der(Family::dihedral, 10, 5, 16, ok);
        gate.line(1, "dihedral derivation dimensions over Q, GF(3), GF(5)", ok, why.str());
    }

    // 2. dicyclic dimension table
    {
        bool ok = true;
        why.str("");
        const int q_dims[] = {3, 6, 9, 12, 15};
        for (int n = 2; n <= 6; ++n)
            expect_der(Family::dicyclic, n, 0, q_dims[n - 2], ok);
        expect_der(Family::dicyclic, 3, 3, 8, ok);
        expect_der(Family::dicyclic, 6, 3, 20, ok);
        expect_der(Family::dicyclic, 5, 5, 16, ok);
        gate.line(2, "dicyclic derivation dimensions over Q, GF(3), GF(5)", ok, why.str());
    }

    // 3. semidihedral dimension table, with the variant notes recorded
    {
        bool ok = true;
        why.str("");
        const int q_dims[] = {0, 9, 12, 21};
        for (int n = 1; n <= 4; ++n)
            expect_der(Family::semidihedral, n, 0, q_dims[n - 1], ok);
        expect_der(Family::semidihedral, 3, 3, 16, ok);
        for (int n = 2; n <= 4; ++n)
            for (unsigned long p : {0ul, 3ul, 5ul, 7ul})
                if (!note_mentions(cell(Family::semidihedral, n, p).rep, "relator check")) {
                    ok = false;
                    why << "[" << cell_name(Family::semidihedral, n, p) << " missing variant note] ";
                }
        if (!note_mentions(cell(Family::semidihedral, 2, 0).rep, "negated and multiplied by b")) {
            ok = false;
            why << "[trailing-factor variant note absent on semidihedral n=2 char=0] ";
        }
        gate.line(3, "semidihedral derivation dimensions with variant notes", ok, why.str());
    }

    // 4. inner dimension = order minus class count everywhere, plus char-2 spot
    //    checks and spanning witness sets
    {
        bool ok = true;
        why.str("");
        for (const auto &[key, c] : cache) {
            bool cell_ok = c.rep.inner_computed == c.rep.order - c.rep.class_count_computed &&
                           check_passed(c.rep, "inner_dimension") &&
                           check_passed(c.rep, "inner_witnesses") &&
                           check_passed(c.rep, "inner_complement_witnesses");
            if (!cell_ok) {
                ok = false;
                why << "[" << cell_name(std::get<0>(key), std::get<1>(key), std::get<2>(key))
                    << " inner mismatch] ";
            }
        }
        Field f2 = make_field(2);
        struct Spot {
            FiniteGroup g;
            std::size_t dim;
            const char *label;
        };
        std::vector<Spot> spots;
        spots.push_back({FiniteGroup::dihedral(3), 3, "D_6"});
        spots.push_back({FiniteGroup::dihedral(4), 3, "D_8"});
        spots.push_back({FiniteGroup::dicyclic(2), 3, "T_8"});
        spots.push_back({FiniteGroup::dicyclic(3), 6, "T_12"});
        spots.push_back({FiniteGroup::semidihedral(2), 9, "SD_16"});
        spots.push_back({FiniteGroup::semidihedral(3), 12, "SD_24"});
        for (const Spot &s : spots) {
            InnerSpace inner = inner_derivation_space(s.g, f2);
            std::size_t classes = (std::size_t)conjugacy_classes(s.g).class_count();
            if (inner.basis.dimension() != s.dim ||
                inner.basis.dimension() != (std::size_t)s.g.order() - classes) {
                ok = false;
                why << "[" << s.label << " over GF(2): inner " << inner.basis.dimension()
                    << " wanted " << s.dim << "] ";
            }
        }
        gate.line(4, "inner dimensions equal order minus class count (incl. GF(2))", ok, why.str());
    }

    // 5. outer derivations exist exactly in the modular regime
    {
        bool ok = true;
        why.str("");
        for (const auto &[key, c] : cache) {
            bool regular = c.rep.regime == Regime::regular;
            if ((c.rep.outer_computed == 0) != regular || !check_passed(c.rep, "outer_dimension")) {
                ok = false;
                why << "[" << cell_name(std::get<0>(key), std::get<1>(key), std::get<2>(key))
                    << " outer " << c.rep.outer_computed << "] ";
            }
        }
        auto pin = [&](Family fam, int n, unsigned long p, int want) {
            const Cached &c = cell(fam, n, p);
            if (c.rep.outer_computed != want) {
                ok = false;
                why << "[" << cell_name(fam, n, p) << " outer " << c.rep.outer_computed
                    << " wanted " << want << "] ";
            }
        };
        pin(Family::dihedral, 3, 3, 1);
        pin(Family::dicyclic, 3, 3, 2);
        pin(Family::semidihedral, 3, 3, 4);
        gate.line(5, "outer dimension vanishes exactly in the regular regime", ok, why.str());
    }

    // 6. the generator-level and whole-algebra solvers agree on every cell
    {
        bool ok = true;
        why.str("");
        for (const auto &[key, c] : cache)
            if (!check_passed(c.rep, "solver_agreement")) {
                ok = false;
                why << "[" << cell_name(std::get<0>(key), std::get<1>(key), std::get<2>(key))
                    << "] ";
            }
        gate.line(6, "independent solvers compute identical spaces on every cell", ok, why.str());
    }

    // 7. catalogued bases extend, are independent, and span
    {
        bool ok = true;
        why.str("");
        for (const auto &[key, c] : cache)
            if (!check_passed(c.rep, "claimed_basis_extends") ||
                !check_passed(c.rep, "claimed_basis_spans")) {
                ok = false;
                why << "[" << cell_name(std::get<0>(key), std::get<1>(key), std::get<2>(key))
                    << "] ";
            }
        gate.line(7, "catalogued bases extend and span on every cell", ok, why.str());
    }

    // 8. structural properties: center, anti-centralizers, cocycle law, d(1)=0
    {
        bool ok = true;
        why.str("");
        for (const auto &[key, c] : cache) {
            bool cell_ok = check_passed(c.rep, "center_class_sums") &&
                           check_passed(c.rep, "inner_kernel_center") &&
                           check_passed(c.rep, "cocycle_law") &&
                           check_passed(c.rep, "identity_annihilated");
            int anti_seen = 0;
            for (const CheckResult &chk : c.rep.checks)
                if (chk.name.rfind("anticentralizer", 0) == 0) {
                    ++anti_seen;
                    cell_ok = cell_ok && chk.pass;
                }
            cell_ok = cell_ok && anti_seen == 2;
            if (!cell_ok) {
                ok = false;
                why << "[" << cell_name(std::get<0>(key), std::get<1>(key), std::get<2>(key))
                    << "] ";
            }
        }
        gate.line(8, "center, anti-centralizer, cocycle, and identity checks", ok, why.str());
    }

    // 9. full single-threaded sweep under the wall-clock budget, byte-identical
    //    output at any parallelism
    {
        bool ok = true;
        why.str("");
        std::vector<FamilySpec> cells = grid_cells(default_grid());
        auto t0 = Clock::now();
        SweepOutcome seq = run_sweep(cells, 1);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 120.0) {
            ok = false;
            why << "[sweep took " << secs << "s] ";
        }
        if (!seq.all_pass()) {
            ok = false;
            why << "[sweep failed at " << seq.first_divergence << "] ";
        }
        SweepOutcome par = run_sweep(cells, 4);
        for (OutputFormat fmt : {OutputFormat::json, OutputFormat::csv, OutputFormat::text})
            if (sweep_to_string(seq, fmt) != sweep_to_string(par, fmt)) {
                ok = false;
                why << "[parallelism changed the bytes] ";
            }
        gate.line(9, "default sweep within budget and byte-deterministic", ok, why.str());
    }

    return gate.failed == 0 ? 0 : 1;
}
