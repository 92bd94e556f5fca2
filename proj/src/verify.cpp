#include <chordenum/algebraic.hpp>
#include <chordenum/enumerator.hpp>
#include <chordenum/geometry.hpp>
#include <chordenum/group.hpp>
#include <chordenum/orbits.hpp>
#include <chordenum/tables.hpp>
#include <chordenum/verify.hpp>

#include "published.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace chordenum {

std::string_view to_string(CheckCategory c) noexcept
{
    switch (c) {
    case CheckCategory::CrossCheck:
        return "cross_check";
    case CheckCategory::Published:
        return "published";
    case CheckCategory::InternalInconsistency:
        return "internal_inconsistency";
    }
    return "?";
}

std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Noted:
        return "noted";
    }
    return "?";
}

bool VerifyReport::ok() const
{
    return count(CheckStatus::Fail) == 0;
}

std::size_t VerifyReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

namespace {

constexpr int kBruteForceMaxL = 22;

std::string str(const std::string& s)
{
    return s;
}

std::string str(Count v)
{
    return std::to_string(v);
}

std::string str(const Rational& r)
{
    return r.to_string();
}

std::string str(const std::vector<int>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string str(const std::vector<std::vector<int>>& vs)
{
    std::string out;
    for (const auto& v : vs)
        out += (out.empty() ? "" : " ") + str(v);
    return out.empty() ? "none" : out;
}

// "(a+b+c)/d", "p/q" or "p"
Rational evaluate_printed(std::string_view text)
{
    const auto slash = text.rfind('/');
    std::string numerator(text.substr(0, slash));
    const Count den = slash == std::string_view::npos ? 1 : std::stoll(std::string(text.substr(slash + 1)));
    numerator.erase(std::remove_if(numerator.begin(), numerator.end(), [](char c) { return c == '(' || c == ')'; }),
                    numerator.end());
    Count num = 0;
    std::istringstream in(numerator);
    for (std::string term; std::getline(in, term, '+');)
        num += std::stoll(term);
    return Rational(num, den);
}

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : report_(r) {}

    template <typename T>
    void equal(std::string name, CheckCategory cat, int n, const T& expected, const T& actual, std::string note = {})
    {
        add(std::move(name), cat, n, str(expected), str(actual), expected == actual, std::move(note));
    }

    void add(std::string name, CheckCategory cat, int n, std::string expected, std::string actual, bool agree,
             std::string note = {})
    {
        CheckStatus status = CheckStatus::Pass;
        if (!agree)
            status = cat == CheckCategory::InternalInconsistency ? CheckStatus::Noted : CheckStatus::Fail;
        report_.checks.push_back({std::move(name), cat, n, std::move(expected), std::move(actual), status,
                                  std::move(note)});
    }

    void skip(std::string name, int n, std::string why)
    {
        report_.checks.push_back(
            {std::move(name), CheckCategory::CrossCheck, n, "", "", CheckStatus::Noted, "skipped: " + std::move(why)});
    }

private:
    VerifyReport& report_;
};

void check_enumeration(Recorder& rec, int L, bool brute)
{
    for (int n = 1; n <= L; ++n) {
        const Count expected = count_distinct(L, n);
        if (brute) {
            Count length = 0;
            ChordStream stream(L, n);
            for (auto it = stream.begin(); it != stream.end(); ++it)
                ++length;
            rec.equal("stream_length", CheckCategory::CrossCheck, n, expected, length);
        }
        const auto rec_n = interior_lattice_count_recursive(L, n);
        rec.equal("layer_recursion_total", CheckCategory::CrossCheck, n, expected, rec_n.total);
        Count bad = 0;
        for (int m = 0; m <= n - 2; ++m)
            for (int k = 1; k <= L - n + 2; ++k)
                bad += rec_n.at(k, m) != binomial(k + m - 1, m);
        rec.equal("layer_values_closed_form", CheckCategory::CrossCheck, n, Count{0}, bad,
                  "count of layer values differing from C(k+m-1, m)");
    }
}

void check_orbits(Recorder& rec, int L, bool brute)
{
    for (int n = 1; n <= L; ++n) {
        const auto formula = repeating_count_formula(L, n);
        const Count nu_formula = total_class_count_formula(L, n);
        const Count nu_group = burnside_cyclic_chords(L, n);
        if (!brute) {
            rec.equal("classes_formula_vs_burnside", CheckCategory::CrossCheck, n, nu_group, nu_formula);
            rec.equal("geometric_repeating", CheckCategory::CrossCheck, n, formula.total, geometric_repeating_count(L, n));
            continue;
        }
        const auto c = census(L, n, SymmetryMode::Dihedral);
        rec.add("triple_agreement", CheckCategory::CrossCheck, n, str(c.classes),
                str(nu_formula) + "," + str(nu_group), c.classes == nu_formula && c.classes == nu_group,
                "orbits vs formula,burnside");
        rec.equal("repeating_total", CheckCategory::CrossCheck, n, c.repeating, formula.total);
        for (const auto& t : formula.terms) {
            const auto it = c.by_period.find(t.i);
            const Count deficit = it == c.by_period.end() ? 0 : it->second.deficit;
            const Count orbits = it == c.by_period.end() ? 0 : it->second.orbits;
            rec.equal("repeating_block_" + std::to_string(t.i), CheckCategory::CrossCheck, n, deficit, t.repeating);
            rec.equal("block_classes_" + std::to_string(t.i), CheckCategory::CrossCheck, n, orbits, t.classes);
        }
        for (const auto& [period, tally] : c.by_period)
            if (n % period != 0)
                rec.add("orbit_size_divides_n", CheckCategory::CrossCheck, n, "divisor", std::to_string(period),
                        false);
        rec.equal("geometric_repeating", CheckCategory::CrossCheck, n, c.repeating, geometric_repeating_count(L, n));
        rec.equal("nu_N_even", CheckCategory::CrossCheck, n, Count{0}, *c.noninvariant_classes % 2);
    }
}

void check_fractional(Recorder& rec, int L, bool brute)
{
    for (int n = 0; n <= L; ++n) {
        Rational census_value(L - 1, L);
        if (n > 0) {
            const Count rep = brute ? census(L, n, SymmetryMode::Cyclic).repeating : repeating_count_formula(L, n).total;
            census_value = Rational(rep, n);
        }
        rec.equal("fractional_repeating", CheckCategory::CrossCheck, n, census_value, fractional_repeating_group(L, n),
                  "census vs group route");
    }
}

void check_lattice(Recorder& rec, int L)
{
    for (int n = 1; n <= L; ++n) {
        const Count formula = surface_lattice_count_formula(L, n);
        Count oracle = 0;
        try {
            oracle = boundary_lattice_count_oracle(L, n);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Overflow)
                throw;
            rec.skip("surface_points", n, "oracle exceeds the 64-bit range");
            continue;
        }
        if (n <= 3)
            rec.equal("surface_points", CheckCategory::CrossCheck, n, oracle, formula, "stars-and-bars vs n[N_C(n-1)+N_C(n-2)]");
        else
            rec.add("surface_points", CheckCategory::InternalInconsistency, n, str(formula), str(oracle), formula == oracle,
                    "delta " + str(oracle - formula) + " (oracle minus formula)");
    }
}

void check_colored(Recorder& rec)
{
    for (auto mode : {SymmetryMode::Cyclic, SymmetryMode::Dihedral}) {
        const ColoredNecklaceProblem p(published::kBeads, published::kColors, mode);
        const auto brute = colored_count_brute(p);
        const std::string tag = std::string(to_string(mode));
        rec.equal("colored_brute_vs_burnside_" + tag, CheckCategory::CrossCheck, -1, brute.classes,
                  colored_count_burnside(p));
        const auto& ref = mode == SymmetryMode::Cyclic ? published::cyclic_census : published::dihedral_census;
        rec.equal("colored_census_" + tag, CheckCategory::Published, -1,
                  str(ref[0]) + "," + str(ref[1]) + "," + str(ref[2]) + "," + str(ref[3]),
                  str(brute.distinct) + "," + str(brute.repeating) + "," + str(brute.total) + "," +
                      str(brute.classes));
        const auto& pat = mode == SymmetryMode::Cyclic ? published::cyclic_patterns : published::dihedral_patterns;
        std::string got;
        for (const auto& pc : brute.by_pattern)
            got += (got.empty() ? "" : ",") + str(pc.classes);
        rec.equal("colored_patterns_" + tag, CheckCategory::Published, -1,
                  str(pat[0]) + "," + str(pat[1]) + "," + str(pat[2]) + "," + str(pat[3]), got);
    }
}

// --- printed reference values, 12-step scale only ---------------------------

template <typename RowT>
void compare_row(Recorder& rec, const std::string& name, const RowT& printed, const TableRow& computed)
{
    for (std::size_t n = 0; n < printed.size(); ++n) {
        std::string expected;
        if constexpr (std::is_same_v<typename RowT::value_type, Count>)
            expected = str(printed[n]);
        else
            expected = std::string(printed[n]);
        rec.equal(name, CheckCategory::Published, static_cast<int>(n), expected, computed.cells[n]);
    }
}

void check_published_tables(Recorder& rec)
{
    const Table scale = build_table("scale", 12);
    compare_row(rec, "scale.N_C", published::N_C, *scale.find("N_C"));
    compare_row(rec, "scale.N_C/n", published::N_C_over_n, *scale.find("N_C/n"));
    compare_row(rec, "scale.I_C", published::I_C, *scale.find("I_C"));
    compare_row(rec, "scale.DeltaN", published::DeltaN, *scale.find("DeltaN"));
    compare_row(rec, "scale.DeltaN/n", published::DeltaN_over_n, *scale.find("DeltaN/n"));
    compare_row(rec, "scale.N_M", published::N_M, *scale.find("N_M"));
    compare_row(rec, "scale.N_M/n", published::N_M_over_n, *scale.find("N_M/n"));

    const Table repN = build_table("repN", 12);
    for (std::size_t i = 0; i < published::DeltaN_i.size(); ++i) {
        const std::string q = "DeltaN_" + std::to_string(i + 1);
        compare_row(rec, "repN." + q, published::DeltaN_i[i], *repN.find(q));
    }
    compare_row(rec, "repN.DeltaN", published::DeltaN, *repN.find("DeltaN"));

    const Table repn = build_table("repn", 12);
    for (std::size_t i = 0; i < published::nu_i.size(); ++i) {
        const std::string q = "nu_" + std::to_string(i + 1);
        compare_row(rec, "repn." + q, published::nu_i[i], *repn.find(q));
    }
    compare_row(rec, "repn.nu", published::nu, *repn.find("nu"));
    compare_row(rec, "repn.nu_C", published::nu_C, *repn.find("nu_C"));
    compare_row(rec, "repn.nu_M", published::nu_M, *repn.find("nu_M"));

    const Table tti = build_table("TTI", 12);
    compare_row(rec, "TTI.nu_P", published::nu_P, *tti.find("nu_P"));
    compare_row(rec, "TTI.nu_N", published::nu_N, *tti.find("nu_N"));
    compare_row(rec, "TTI.nu_Q", published::nu_Q, *tti.find("nu_Q"));
    compare_row(rec, "TTI.nu_M", published::nu_M, *tti.find("nu_M"));

    const Table face = build_table("face", 12);
    for (std::size_t j = 0; j < published::faces.size(); ++j) {
        const std::string q = "F_" + std::to_string(j);
        const TableRow& row = *face.find(q);
        for (std::size_t n = 0; n < published::faces[j].size(); ++n)
            rec.equal("face." + q, CheckCategory::Published, static_cast<int>(n), str(published::faces[j][n]),
                      row.cells[n]);
    }
}

void check_published_core(Recorder& rec)
{
    const Table core = build_table("core", 12);
    compare_row(rec, "core.phi", published::phi, *core.find("phi"));
    const TableRow& group = *core.find("DeltaN/n_group");
    const TableRow& cen = *core.find("DeltaN/n_census");
    for (int n = 0; n <= 12; ++n) {
        const auto i = static_cast<std::size_t>(n);
        rec.equal("core.group_value", CheckCategory::Published, n, str(evaluate_printed(published::core_group[i])),
                  group.cells[i]);
        rec.equal("core.census_value", CheckCategory::Published, n, str(evaluate_printed(published::core_census[i])),
                  cen.cells[i]);
    }

    // Addend decompositions: the reference states they differ only at n = 4, 6, 8.
    for (int n = 1; n <= 12; ++n) {
        std::vector<Rational> g;
        for (const auto& a : fractional_repeating_addends(12, n))
            g.push_back(a.value);
        std::vector<Rational> c;
        for (const auto& t : repeating_count_formula(12, n).terms)
            if (t.repeating != 0)
                c.push_back(Rational(t.repeating, n));
        std::sort(g.begin(), g.end());
        std::sort(c.begin(), c.end());
        const bool differ = g != c;
        const bool claimed = n == 4 || n == 6 || n == 8;
        rec.add("core.addends_differ", CheckCategory::InternalInconsistency, n, claimed ? "differ" : "same",
                differ ? "differ" : "same", differ == claimed,
                differ == claimed ? ""
                                  : "group route has " + std::to_string(g.size()) + " addends, census route " +
                                        std::to_string(c.size()) + "; printed cell collapses them");
    }
}

void check_published_geometry(Recorder& rec)
{
    for (const auto& chain : published::layer_chains()) {
        const auto r = interior_lattice_count_recursive(12, chain.n);
        std::vector<Count> got;
        for (int k = 12 - chain.n + 1; k >= 1; --k)
            got.push_back(r.at(k, chain.n - 2));
        std::string e, a;
        for (std::size_t i = 0; i < chain.values.size(); ++i)
            e += (i ? "," : "") + str(chain.values[i]);
        for (std::size_t i = 0; i < got.size(); ++i)
            a += (i ? "," : "") + str(got[i]);
        rec.equal("layer_chain", CheckCategory::Published, chain.n, e, a);
    }
    for (int n = 0; n <= 12; ++n) {
        const auto i = static_cast<std::size_t>(n);
        rec.equal("poli.N_S_chain", CheckCategory::Published, n, published::N_S_chain[i],
                  surface_lattice_count_formula(12, n));
        rec.equal("poli.N_V_table", CheckCategory::Published, n, published::N_V_table[i],
                  n == 0 ? Count{0} : volume_lattice_count_formula(12, n));
        rec.equal("poli.N_S_table_vs_chain", CheckCategory::InternalInconsistency, n, published::N_S_chain[i],
                  published::N_S_table[i], published::N_S_table[i] == published::N_S_chain[i] ? "" : "table cell typo");
    }
}

void check_published_weighted(Recorder& rec)
{
    for (const auto& w : published::weighted_lists()) {
        auto printed = w.solutions;
        std::sort(printed.begin(), printed.end());
        const auto solved = solve_weighted_composition({w.weights, 12}, true);
        std::string note;
        if (printed != solved) {
            std::vector<std::vector<int>> extra, missing;
            std::set_difference(printed.begin(), printed.end(), solved.begin(), solved.end(),
                                std::back_inserter(extra));
            std::set_difference(solved.begin(), solved.end(), printed.begin(), printed.end(),
                                std::back_inserter(missing));
            note = "printed only: " + str(extra) + "; solved only: " + str(missing);
        }
        rec.add("weighted" + str(w.weights), CheckCategory::InternalInconsistency, w.n, str(printed), str(solved),
                printed == solved, note);
    }

    // The class-count expression sums repeat terms up to i = 12 while the
    // repeat total stops at i = 5; both agree iff every term beyond 5 is zero.
    Count beyond = 0;
    for (int n = 1; n <= 12; ++n)
        for (const auto& t : repeating_count_formula(12, n).terms)
            if (t.i > 5)
                beyond += t.repeating;
    rec.equal("repeat_sum_upper_bound", CheckCategory::CrossCheck, -1, Count{0}, beyond,
              "sum bound written as 12 in one place and 5 in another; terms i > 5 vanish");
    rec.add("repeat_sum_upper_bound_notation", CheckCategory::InternalInconsistency, -1, "5", "12", false,
            "upper summation bound differs between the two expressions for the repeat count");
}

} // namespace

VerifyReport run_verify(int L)
{
    TemperamentParams{L};
    VerifyReport report;
    report.L = L;
    report.brute_force = L <= kBruteForceMaxL;
    Recorder rec(report);

    check_enumeration(rec, L, report.brute_force);
    check_orbits(rec, L, report.brute_force);
    check_fractional(rec, L, report.brute_force);
    check_lattice(rec, L);
    check_colored(rec);
    if (L == 12) {
        check_published_tables(rec);
        check_published_core(rec);
        check_published_geometry(rec);
        check_published_weighted(rec);
    }
    return report;
}

std::string report_to_json(const VerifyReport& r)
{
    using nlohmann::ordered_json;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json j;
        j["check"] = c.name;
        j["category"] = std::string(to_string(c.category));
        j["n"] = c.n < 0 ? ordered_json(nullptr) : ordered_json(c.n);
        j["expected"] = c.expected;
        j["actual"] = c.actual;
        j["status"] = std::string(to_string(c.status));
        if (!c.note.empty())
            j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    ordered_json doc;
    doc["meta"] = {{"L", r.L},
                   {"version", std::string(kVersion)},
                   {"brute_force", r.brute_force},
                   {"pass", r.count(CheckStatus::Pass)},
                   {"fail", r.count(CheckStatus::Fail)},
                   {"noted", r.count(CheckStatus::Noted)},
                   {"ok", r.ok()}};
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const VerifyReport& r)
{
    std::ostringstream out;
    out << "check,category,n,expected,actual,status\n";
    auto quote = [](const std::string& s) {
        return s.find_first_of(", ") == std::string::npos ? s : "\"" + s + "\"";
    };
    for (const auto& c : r.checks)
        out << quote(c.name) << ',' << to_string(c.category) << ',' << (c.n < 0 ? "" : std::to_string(c.n)) << ','
            << quote(c.expected) << ',' << quote(c.actual) << ',' << to_string(c.status) << '\n';
    return out.str();
}

} // namespace chordenum
