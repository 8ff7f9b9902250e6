// Acceptance run: one PASS or FAIL line per criterion, details on the following lines.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "cubical/cli.hpp"
#include "cubical/cubical.hpp"
#include "oracles.hpp"

using namespace cubical;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome
{
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<std::string> details;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (problems.size() < 10) {
                problems.push_back(what);
            }
        }
    }
    void detail(const std::string& d) { details.push_back(d); }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << secs << " s]\n";
    for (const auto& d : o.details) {
        std::cout << "    " << d << "\n";
    }
    for (const auto& p : o.problems) {
        std::cout << "    problem: " << p << "\n";
    }
}

std::string show(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

bool all_hold(const VerificationReport& r)
{
    return std::all_of(r.records.begin(), r.records.end(), [](const Record& x) { return x.holds(); });
}

const Record* find_record(const VerificationReport& r, const std::string& prefix, int index)
{
    for (const auto& rec : r.records) {
        if (rec.identity.rfind(prefix, 0) == 0 && rec.index == index) {
            return &rec;
        }
    }
    return nullptr;
}

/// Every ordered tuple of positive side lengths of the given length with product <= limit.
void for_each_tuple(int length, Int limit, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> t;
    std::function<void(Int)> rec = [&](Int room) {
        if (static_cast<int>(t.size()) == length) {
            fn(t);
            return;
        }
        for (int a = 1; a <= room; ++a) {
            t.push_back(a);
            rec(room / a);
            t.pop_back();
        }
    };
    rec(limit);
}

/// Cubical complexes from every generator family across d = 1..5.
std::vector<GeneratedComplex> cubical_zoo()
{
    std::vector<GeneratedComplex> z;
    for (int n = 1; n <= 5; ++n) {
        z.push_back(solid_cube(n));
    }
    for (int n = 2; n <= 6; ++n) {
        z.push_back(cube_boundary(n));
    }
    for (const auto& s : std::vector<std::vector<int>>{{3}, {2, 1}, {3, 2}, {2, 2, 2}, {3, 1, 2}, {2, 1, 1, 2},
                                                        {2, 1, 1, 1, 2}}) {
        z.push_back(pile_of_cubes(s));
    }
    for (const auto& s : std::vector<std::vector<int>>{{2, 1}, {3, 2}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2},
                                                        {2, 1, 1, 1}, {2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1}}) {
        z.push_back(pile_boundary(s));
    }
    for (const auto& s : std::vector<std::vector<int>>{{3}, {4, 4}, {5, 4}, {3, 3, 3}, {4, 4, 4}}) {
        z.push_back(cubical_torus(s));
    }
    for (auto st : {Stacking::linear, Stacking::branching}) {
        for (int dim = 2; dim <= 4; ++dim) {
            auto s = stacked_cubical(4, dim, st);
            z.push_back(std::move(s.ball));
            z.push_back(std::move(s.sphere));
        }
    }
    z.push_back(prism(cube_boundary(3)));
    z.push_back(prism(cubical_torus({3, 4})));
    z.push_back(prism(pile_of_cubes({2, 1})));
    GeneratedComplex whisker;
    whisker.complex = build_cubical({CubicalCell(2, {0, 1, 2, 3}), CubicalCell(1, {3, 9})});
    whisker.provenance = "square with a pendant edge";
    z.push_back(std::move(whisker));
    return z;
}

struct ClosedCase
{
    GeneratedComplex g;
    bool cube_boundary;
};

std::vector<ClosedCase> closed_pseudomanifolds()
{
    std::vector<ClosedCase> out;
    for (int n = 2; n <= 6; ++n) {
        out.push_back({cube_boundary(n), true});
    }
    for (const auto& s : std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 1, 1}, {2, 1}, {3, 2}, {2, 2, 1},
                                                        {3, 1, 1}, {2, 2, 2}, {2, 1, 1, 1}, {2, 2, 1, 1, 1}}) {
        const bool unit = std::all_of(s.begin(), s.end(), [](int a) { return a == 1; });
        out.push_back({pile_boundary(s), unit});
    }
    for (auto st : {Stacking::linear, Stacking::branching}) {
        for (int dim = 2; dim <= 5; ++dim) {
            for (int n : {1, 2, 5}) {
                out.push_back({stacked_cubical(n, dim, st).sphere, n == 1});
            }
        }
    }
    for (const auto& s : std::vector<std::vector<int>>{{3}, {4}, {3, 3}, {4, 4}, {5, 4}, {3, 3, 3}, {4, 4, 4}}) {
        out.push_back({cubical_torus(s), false});
    }
    return out;
}

void adin_ds(Outcome& o)
{
    for (int n = 2; n <= 6; ++n) {
        const auto g = cube_boundary(n);
        const auto r = verify_cubical_ds(g.cubical(), g.claim());
        o.expect(r.status == Status::pass && all_hold(r), "cube_boundary(" + std::to_string(n) + ")");
    }
    for (const auto& sides : std::vector<std::vector<int>>{{4, 4}, {4, 4, 4}, {5, 4}}) {
        const auto g = cubical_torus(sides);
        const auto r = verify_cubical_ds(g.cubical(), g.claim());
        o.expect(r.status == Status::pass && all_hold(r), "torus" + show(sides));
        // right-hand side from a direct grid count
        const int d = static_cast<int>(sides.size());
        const auto f = oracle::torus_f(sides);
        Int chi = -1;
        for (int i = 0; i <= d; ++i) {
            chi += (i % 2 == 0 ? 1 : -1) * f[static_cast<std::size_t>(i)];
        }
        std::string rhs;
        for (int i = 0; i <= d + 1; ++i) {
            const auto* rec = find_record(r, "h^c_{d+1-i} - h^c_i", i);
            const Int expected = (i % 2 == 0 ? 1 : -1) * checked::pow(-2, d) * (chi - (d % 2 == 0 ? 1 : -1));
            o.expect(rec && rec->rhs == expected && rec->lhs == rec->rhs,
                     "torus" + show(sides) + " index " + std::to_string(i));
            if (rec) {
                rhs += " " + std::to_string(rec->lhs) + "=" + std::to_string(rec->rhs);
            }
        }
        o.detail("torus" + show(sides) + " lhs=rhs by index:" + rhs);
    }
}

void boundary_ds(Outcome& o)
{
    for (int d = 2; d <= 4; ++d) {
        const auto g = solid_cube(d);
        const auto r = verify_cubical_boundary_ds(g.cubical(), g.claim());
        o.expect(r.status == Status::pass && all_hold(r), "solid_cube(" + std::to_string(d) + ")");
    }
    const auto hand = verify_cubical_boundary_ds(pile_of_cubes({2, 1}).cubical(), pile_of_cubes({2, 1}).claim());
    const auto* j1 = find_record(hand, "h^c_{d+1-j} - h^c_j", 1);
    const auto* j2 = find_record(hand, "h^c_{d+1-j} - h^c_j", 2);
    o.expect(j1 && j1->lhs == -2 && j1->rhs == -2, "pile(2,1) j=1");
    o.expect(j2 && j2->lhs == 2 && j2->rhs == 2, "pile(2,1) j=2");
    if (j1 && j2) {
        o.detail("pile(2,1): j=1 " + std::to_string(j1->lhs) + " = " + std::to_string(j1->rhs) + ", j=2 " +
                 std::to_string(j2->lhs) + " = " + std::to_string(j2->rhs));
    }
    for (int d = 2; d <= 4; ++d) {
        int count = 0;
        int bad = 0;
        for_each_tuple(d, 200, [&](const std::vector<int>& sides) {
            ++count;
            const auto g = pile_of_cubes(sides);
            const auto r = verify_cubical_boundary_ds(g.cubical(), g.claim());
            const bool good = r.status == Status::pass && all_hold(r) &&
                              static_cast<int>(std::count_if(r.records.begin(), r.records.end(), [](const Record& x) {
                                  return x.identity.rfind("h^c_{d+1-j} - h^c_j", 0) == 0;
                              })) == d;
            bad += !good;
            o.expect(good, "pile" + show(sides));
        });
        o.detail("dimension " + std::to_string(d) + ": " + std::to_string(count) + " pile tuples, " +
                 std::to_string(count - bad) + " with every j matching");
    }
}

void simplicial_boundary_ds(Outcome& o)
{
    for (int d = 1; d <= 5; ++d) {
        const auto g = simplex(d);
        const auto r = verify_simplicial_boundary_ds(g.simplicial(), g.claim());
        o.expect(r.status == Status::pass && all_hold(r), "simplex(" + std::to_string(d) + ")");
    }
    int balls = 0;
    for (int d = 1; d <= 4; ++d) {
        for (int n = 1; n <= 50; ++n) {
            std::vector<GeneratedComplex> gs{stacked_simplicial_ball(d, n, Gluing::linear)};
            for (std::uint64_t seed : {1u, 2u, 3u}) {
                gs.push_back(stacked_simplicial_ball(d, n, Gluing::tree, seed));
            }
            for (const auto& g : gs) {
                ++balls;
                const auto r = verify_simplicial_boundary_ds(g.simplicial(), g.claim());
                o.expect(r.status == Status::pass && all_hold(r), g.provenance);
            }
        }
    }
    o.detail(std::to_string(balls) + " stacked balls (d = 1..4, 1..50 facets, linear and tree gluing)");
}

void lower_bounds(Outcome& o)
{
    int closed = 0;
    int curves = 0;
    for (const auto& [g, is_cube] : closed_pseudomanifolds()) {
        const auto& k = g.cubical();
        const int d = k.dim();
        const auto f = f_vector(k);
        o.expect(is_pseudomanifold(k), g.provenance + " is not a closed pseudomanifold");
        const auto v = verify_vertex_lower_bound(k, g.claim());
        if (d < 2) {
            // cycles: outside the hypothesis, and the 3-cycle has f_0 = 3 < 4
            ++curves;
            o.expect(v.status == Status::inapplicable, g.provenance + ": expected inapplicable for d = 1");
            continue;
        }
        ++closed;
        o.expect(v.status == Status::pass && all_hold(v), g.provenance + ": f_0 bound");
        bool all_equal = true;
        bool vertex_equal = f[0] == checked::pow2(d + 1);
        for (int i = 0; i <= d; ++i) {
            const Int bound = checked::mul(binomial(d + 1, i), checked::pow2(d + 1 - i));
            o.expect(f[i] >= bound, g.provenance + ": f_" + std::to_string(i));
            all_equal = all_equal && f[i] == bound;
        }
        if (d >= 2) {
            const auto fb = verify_face_lower_bounds(k, g.claim());
            o.expect(fb.status == Status::pass && all_hold(fb), g.provenance + ": face bounds");
        }
        o.expect(vertex_equal == is_cube && all_equal == is_cube, g.provenance + ": equality case");
    }
    int every = 0;
    for (const auto& g : cubical_zoo()) {
        if (g.dim() < 1) {
            continue;
        }
        ++every;
        const auto r = verify_antipodal_pair_bound(g.cubical());
        o.expect(r.status == Status::pass && all_hold(r), g.provenance + ": antipodal pair bound");
    }
    o.expect(f_vector(cubical_torus({3}).cubical())[0] == 3, "3-cycle");
    o.detail(std::to_string(closed) + " closed pseudomanifolds with d >= 2, equality exactly on cube boundaries; " +
             std::to_string(curves) + " cycles reported inapplicable; pair bound on " + std::to_string(every) +
             " complexes");
}

void dual_path(Outcome& o)
{
    std::set<int> dims;
    int n = 0;
    for (const auto& g : cubical_zoo()) {
        ++n;
        dims.insert(g.dim());
        o.expect(h_short_cubical(g.cubical()) == h_short_cubical_from_links(g.cubical()), g.provenance);
    }
    o.expect(n >= 30, "fewer than 30 complexes");
    for (int d = 1; d <= 5; ++d) {
        o.expect(dims.contains(d), "no complex of dimension " + std::to_string(d));
    }
    o.detail(std::to_string(n) + " complexes, dimensions " + std::to_string(*dims.begin()) + ".." +
             std::to_string(*dims.rbegin()));
}

void top_entry_and_link_sums(Outcome& o)
{
    int n = 0;
    for (const auto& g : cubical_zoo()) {
        ++n;
        const auto& k = g.cubical();
        const int d = k.dim();
        const auto hc = h_long_cubical(k);
        o.expect(hc[d + 1] == checked::mul(checked::pow(-2, d), reduced_euler(k)), g.provenance + ": top entry");
        const auto r = verify_link_sums(k);
        const bool sums = std::all_of(r.records.begin(), r.records.end(), [](const Record& x) {
            return x.identity.rfind("2^i f_i", 0) != 0 || x.holds();
        });
        o.expect(r.status == Status::pass && sums, g.provenance + ": 2^i f_i = sum_v f_{i-1}(lk v)");
        o.expect(verify_long_short_relation(k).status == Status::pass, g.provenance + ": long/short relation");
    }
    o.detail(std::to_string(n) + " complexes");
}

void four_sphere_g2(Outcome& o)
{
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> side(1, 3);
    std::set<std::vector<int>> seen;
    Int least = std::numeric_limits<Int>::max();
    while (seen.size() < 24) {
        std::vector<int> s(5);
        for (auto& a : s) {
            a = side(rng);
        }
        if (!seen.insert(s).second) {
            continue;
        }
        const auto g = pile_boundary(s);
        const auto r = verify_four_sphere_g2(g.cubical(), g.claim());
        const auto* rec = find_record(r, "g^c_2 >= 0", 2);
        o.expect(r.status == Status::pass && all_hold(r) && rec, "pile_boundary" + show(s));
        if (rec) {
            least = std::min(least, rec->lhs);
        }
    }
    o.detail(std::to_string(seen.size()) + " random pile boundaries with sides in 1..3; least g^c_2 = " +
             std::to_string(least));
}

void macaulay(Outcome& o)
{
    const auto t0 = Clock::now();
    for (int i = 1; i <= 8; ++i) {
        for (Int ell = 0; ell <= 10000; ++ell) {
            const auto rep = macaulay_rep(ell, i);
            bool chain = rep.sum() == ell;
            for (std::size_t t = 0; t < rep.terms.size(); ++t) {
                chain = chain && rep.terms[t].bottom == i - static_cast<int>(t) && rep.terms[t].top >= rep.terms[t].bottom &&
                        rep.terms[t].bottom >= 1 && (t == 0 || rep.terms[t].top < rep.terms[t - 1].top);
            }
            o.expect(chain, "round trip at l=" + std::to_string(ell) + ", i=" + std::to_string(i));
        }
    }
    o.expect(pseudopower(2, 2) == 2, "2^<2> = 2");
    for (int i = 1; i <= 10; ++i) {
        o.expect(pseudopower(1, i) == 1, "1^<i> = 1");
        o.expect(pseudopower(0, i) == 0, "0^<i> = 0");
    }
    // i = 1 is excluded: 2^<1> = C(3,2) = 3
    o.expect(pseudopower(2, 1) == 3, "2^<1> = 3");
    for (int i = 2; i <= 10; ++i) {
        for (Int g = 0; g <= 2; ++g) {
            o.expect(pseudopower(g, i) <= 2, "cascade at g=" + std::to_string(g) + ", i=" + std::to_string(i));
        }
    }
    // cascade through whole M-vectors: once some g_i <= 2 (i >= 2), every later entry stays <= 2
    for (Int g = 0; g <= 2; ++g) {
        Int cur = g;
        for (int i = 2; i <= 10; ++i) {
            cur = pseudopower(cur, i);
            o.expect(cur <= g, "iterated cascade from " + std::to_string(g));
        }
    }
    const double secs = seconds_since(t0);
    o.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
    o.detail("80008 representations checked in " + std::to_string(secs) + " s");
}

void cli_round_trip(Outcome& o)
{
    const std::vector<std::vector<std::string>> invocations{
        {"cube-boundary", "2"},       {"cube-boundary", "5"},          {"solid-cube", "0"},
        {"solid-cube", "4"},          {"pile", "3", "2", "1"},         {"pile-boundary", "2", "1", "2"},
        {"torus", "4", "4"},          {"torus", "3", "3", "3"},        {"stacked-cubical-ball", "3", "3"},
        {"stacked-cubical-sphere", "4", "4"}, {"branching-cubical-ball", "6", "3"},
        {"branching-cubical-sphere", "6", "4"}, {"simplex", "4"},      {"simplex-boundary", "3"},
        {"cross-polytope-boundary", "4"}, {"stacked-ball", "3", "10"}, {"stacked-ball", "4", "12", "7"},
        {"stacked-sphere", "3", "8"}, {"stacked-sphere", "5", "6", "3"}, {"prism", "torus", "3", "4"},
        {"prism", "pile", "2", "2"}};
    std::set<std::string> families;
    for (const auto& inv : invocations) {
        families.insert(inv[0]);
        const std::vector<std::string> params(inv.begin() + 1, inv.end());
        const auto g = cli::generate(inv[0], params);
        const std::string text = serialize_complex(g);
        std::istringstream in(text);
        const auto back = parse_complex(in);
        bool same = back.topology == g.topology && back.polytopal == g.polytopal &&
                    back.provenance == g.provenance && back.is_cubical() == g.is_cubical();
        same = same && (g.is_cubical() ? back.cubical() == g.cubical() : back.simplicial() == g.simplicial());
        same = same && serialize_complex(back) == text;
        o.expect(same, "round trip of " + g.provenance);
    }
    for (const auto& [name, args] : cli::families()) {
        o.expect(families.contains(name), "family " + name + " not exercised");
    }

    const auto dir = std::filesystem::temp_directory_path() / ("cubical_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::ostringstream sink;
    const auto torus = (dir / "torus.cplx").string();
    const auto bad = (dir / "bad.cplx").string();
    const auto fake = (dir / "fake.cplx").string();
    o.expect(cli::cmd_gen("torus", {"4", "4"}, torus, sink, sink) == cli::exit_ok, "gen");
    std::ofstream(bad) << "format_version 1\nkind cubical\ndim 2\ncell 2 0 1 2\n";
    {
        std::ofstream f(fake);
        f << "format_version 1\nkind simplicial\ndim 3\ntopology sphere\npolytopal true\n";
        for (int base : {0, 5}) {
            for (int skip = 0; skip < 5; ++skip) {
                f << "facet";
                for (int v = 0; v < 5; ++v) {
                    if (v != skip) {
                        f << ' ' << base + v;
                    }
                }
                f << '\n';
            }
        }
    }
    const int e0 = cli::cmd_verify("adin-ds", torus, false, sink, sink);
    const int e1 = cli::cmd_verify("glbc", fake, false, sink, sink);
    const int e2 = cli::cmd_compute("f", bad, false, sink, sink);
    const int e3 = cli::cmd_verify("thm42", torus, false, sink, sink);
    std::filesystem::remove_all(dir);
    o.expect(e0 == 0 && e1 == 1 && e2 == 2 && e3 == 3, "exit codes");
    o.detail(std::to_string(invocations.size()) + " generator outputs round-tripped; exit codes " +
             std::to_string(e0) + " " + std::to_string(e1) + " " + std::to_string(e2) + " " + std::to_string(e3));
}

} // namespace

int main()
{
    report(1, "cubical Dehn-Sommerville on cube boundaries and tori, under 5 s", [](Outcome& o) {
        const auto t0 = Clock::now();
        adin_ds(o);
        const double secs = seconds_since(t0);
        o.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
    });
    report(2, "cubical Dehn-Sommerville with boundary on solid cubes and every pile with <= 200 cells", boundary_ds);
    report(3, "simplicial Dehn-Sommerville with boundary on simplices and stacked balls", simplicial_boundary_ds);
    report(4, "vertex and face lower bounds, equality cases, antipodal pair bound", lower_bounds);
    report(5, "short cubical h from f equals the vertex-link sum", dual_path);
    report(6, "top entry of the long cubical h and the link double count", top_entry_and_link_sums);
    report(7, "g^c_2 >= 0 on random cubical 4-spheres", four_sphere_g2);
    report(8, "Macaulay representations, pseudopowers and the cascade, under 10 s", macaulay);
    report(9, "file round trip on every generator output and every exit code", cli_round_trip);
    std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criteria not met") << "\n";
    return failures == 0 ? 0 : 1;
}
