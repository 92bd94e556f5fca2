#include <chordenum/algebraic.hpp>
#include <chordenum/enumerator.hpp>
#include <chordenum/geometry.hpp>
#include <chordenum/group.hpp>
#include <chordenum/orbits.hpp>
#include <chordenum/tables.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace chordenum {

namespace {

// Largest L whose full census (2^(L-1) chords over all n) is brute-forced.
constexpr int kBruteForceMaxL = 22;

using Cells = std::vector<std::string>;

std::string cell(Count v)
{
    return std::to_string(v);
}

std::string cell(const Rational& r)
{
    return r.to_string();
}

std::vector<std::string> number_columns(int last)
{
    std::vector<std::string> cols;
    for (int n = 0; n <= last; ++n)
        cols.push_back(std::to_string(n));
    return cols;
}

std::string addend_sum(const std::vector<Count>& numerators, Count denominator)
{
    if (numerators.empty())
        return "0/" + std::to_string(denominator);
    if (numerators.size() == 1)
        return std::to_string(numerators[0]) + "/" + std::to_string(denominator);
    std::string out = "(";
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (i)
            out += '+';
        out += std::to_string(numerators[i]);
    }
    return out + ")/" + std::to_string(denominator);
}

// Delta N(n) and the route that produced it.
struct Repeating {
    Count value;
    const char* method;
};

Repeating repeating_for(int L, int n)
{
    if (n == 0)
        return {0, "convention"};
    if (L <= kBruteForceMaxL)
        return {census(L, n, SymmetryMode::Cyclic).repeating, "orbits"};
    return {repeating_count_formula(L, n).total, "formula"};
}

int largest_block_length(int L)
{
    int best = 1;
    for (int n = 1; n <= L; ++n)
        for (const auto& t : repeating_count_formula(L, n).terms)
            if (t.repeating != 0)
                best = std::max(best, t.i);
    return best;
}

Table scale_table(int L)
{
    Table t{"scale", L, "n", number_columns(L), {}};
    Cells nc, ncn, ic, dn, dnn, nm, nmn;
    const char* dn_method = "orbits";
    for (int n = 0; n <= L; ++n) {
        const Count distinct = count_distinct(L, n);
        const auto rep = repeating_for(L, n);
        if (n > 0)
            dn_method = rep.method;
        nc.push_back(cell(distinct));
        ncn.push_back(cell(fractional_distinct(L, n)));
        ic.push_back(cell(integer_part_distinct(L, n)));
        dn.push_back(cell(rep.value));
        nm.push_back(cell(distinct + rep.value));
        if (n == 0) {
            dnn.push_back(cell(Rational(L - 1, L)));
            nmn.push_back(cell(Count{1}));
        } else {
            dnn.push_back(cell(Rational(rep.value, n)));
            nmn.push_back(cell(Rational(distinct + rep.value, n)));
        }
    }
    t.rows = {{"N_C", "binomial", nc},      {"N_C/n", "binomial", ncn}, {"I_C", "binomial", ic},
              {"DeltaN", dn_method, dn},    {"DeltaN/n", dn_method, dnn}, {"N_M", dn_method, nm},
              {"N_M/n", dn_method, nmn}};
    return t;
}

Table repN_table(int L)
{
    Table t{"repN", L, "n", number_columns(L), {}};
    const int imax = largest_block_length(L);
    std::vector<Cells> per_i(static_cast<std::size_t>(imax + 1));
    Cells total;
    const char* total_method = "orbits";
    for (int n = 0; n <= L; ++n) {
        if (n == 0) {
            for (int i = 1; i <= imax; ++i)
                per_i[static_cast<std::size_t>(i)].push_back("0");
            total.push_back("0");
            continue;
        }
        const auto b = repeating_count_formula(L, n);
        for (int i = 1; i <= imax; ++i) {
            const RepeatTerm* term = b.find(i);
            per_i[static_cast<std::size_t>(i)].push_back(cell(term ? term->repeating : 0));
        }
        const auto rep = repeating_for(L, n);
        total_method = rep.method;
        total.push_back(cell(rep.value));
    }
    for (int i = 1; i <= imax; ++i)
        t.rows.push_back({"DeltaN_" + std::to_string(i), "formula", per_i[static_cast<std::size_t>(i)]});
    t.rows.push_back({"DeltaN", total_method, total});
    return t;
}

Table repn_table(int L)
{
    Table t{"repn", L, "n", number_columns(L), {}};
    const int imax = largest_block_length(L);
    std::vector<Cells> per_i(static_cast<std::size_t>(imax + 1));
    Cells nu, nu_c, nu_m;
    for (int n = 0; n <= L; ++n) {
        if (n == 0) {
            // the T_0 class is counted once, as a one-block repetition
            for (int i = 1; i <= imax; ++i)
                per_i[static_cast<std::size_t>(i)].push_back(i == 1 ? "1" : "0");
            nu.push_back("1");
            nu_c.push_back("0");
            nu_m.push_back("1");
            continue;
        }
        const auto b = repeating_count_formula(L, n);
        Count deficient = 0;
        for (int i = 1; i <= imax; ++i) {
            const RepeatTerm* term = b.find(i);
            const Count v = term ? term->classes : 0;
            deficient += v;
            per_i[static_cast<std::size_t>(i)].push_back(cell(v));
        }
        const Count classes = burnside_cyclic_chords(L, n);
        nu.push_back(cell(deficient));
        nu_c.push_back(cell(classes - deficient));
        nu_m.push_back(cell(classes));
    }
    for (int i = 1; i <= imax; ++i)
        t.rows.push_back({"nu_" + std::to_string(i), "formula", per_i[static_cast<std::size_t>(i)]});
    t.rows.push_back({"nu", "formula", nu});
    t.rows.push_back({"nu_C", "burnside-formula", nu_c});
    t.rows.push_back({"nu_M", "burnside", nu_m});
    return t;
}

Table tti_table(int L)
{
    if (L > kBruteForceMaxL)
        throw Error(ErrorCode::ProblemTooLarge,
                    "reflection classes need orbit detection; L <= " + std::to_string(kBruteForceMaxL));
    Table t{"TTI", L, "n", number_columns(L), {}};
    Cells p, nn, q, m;
    for (int n = 0; n <= L; ++n) {
        const auto c = census(L, n, SymmetryMode::Dihedral);
        p.push_back(cell(*c.invariant_classes));
        nn.push_back(cell(*c.noninvariant_classes));
        q.push_back(cell(*c.dihedral_classes));
        m.push_back(cell(c.classes));
    }
    t.rows = {{"nu_P", "orbits", p}, {"nu_N", "orbits", nn}, {"nu_Q", "orbits", q}, {"nu_M", "orbits", m}};
    return t;
}

Table core_table(int L)
{
    Table t{"core", L, "n", number_columns(L), {}};
    Cells phi, group_value, group_terms, census_value, census_terms;
    for (int n = 0; n <= L; ++n) {
        phi.push_back(cell(n == 0 ? Count{1} : euler_phi(n)));
        group_value.push_back(cell(fractional_repeating_group(L, n)));
        std::vector<Count> g;
        for (const auto& a : fractional_repeating_addends(L, n))
            g.push_back(euler_phi(a.j) * binomial(L / a.j, n / a.j));
        group_terms.push_back(addend_sum(g, L));

        if (n == 0) {
            census_value.push_back(cell(Rational(L - 1, L)));
            census_terms.push_back(cell(Rational(L - 1, L)));
            continue;
        }
        const auto rep = repeating_for(L, n);
        census_value.push_back(cell(Rational(rep.value, n)));
        std::vector<Count> c;
        for (const auto& term : repeating_count_formula(L, n).terms)
            if (term.repeating != 0)
                c.push_back(term.repeating);
        census_terms.push_back(addend_sum(c, n));
    }
    t.rows = {{"phi", "totient", phi},
              {"DeltaN/n_group", "burnside", group_value},
              {"addends_group", "burnside", group_terms},
              {"DeltaN/n_census", L <= kBruteForceMaxL ? "orbits" : "formula", census_value},
              {"addends_census", "formula", census_terms}};
    return t;
}

Table poli_table(int L)
{
    Table t{"poli", L, "n", number_columns(L), {}};
    Cells nc, ns, nv, ns_o, nv_o, delta;
    for (int n = 0; n <= L; ++n) {
        const Count s = surface_lattice_count_formula(L, n);
        nc.push_back(cell(count_distinct(L, n)));
        ns.push_back(cell(s));
        nv.push_back(cell(volume_lattice_count_formula(L, n)));
        try {
            const Count so = n == 0 ? 0 : boundary_lattice_count_oracle(L, n);
            const Count vo = n == 0 ? 0 : lattice_count_oracle(L, n, Positivity::Nonnegative);
            ns_o.push_back(cell(so));
            nv_o.push_back(cell(vo));
            delta.push_back(cell(so - s));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Overflow)
                throw;
            ns_o.push_back("overflow");
            nv_o.push_back("overflow");
            delta.push_back("overflow");
        }
    }
    t.rows = {{"N_C", "binomial", nc},           {"N_S", "layer-formula", ns},
              {"N_V", "layer-formula", nv},      {"N_S_oracle", "stars-and-bars", ns_o},
              {"N_V_oracle", "stars-and-bars", nv_o}, {"delta", "oracle-minus-formula", delta}};
    return t;
}

Table face_table(int L)
{
    const int last = std::max(13, L + 1);
    Table t{"face", L, "n", number_columns(last), {}};
    for (int j = 0; j <= last; ++j) {
        Cells row;
        for (int n = 0; n <= last; ++n)
            row.push_back(cell(face_count(n, j)));
        t.rows.push_back({"F_" + std::to_string(j), "pascal", row});
    }
    return t;
}

} // namespace

const TableRow* Table::find(std::string_view quantity) const
{
    for (const auto& r : rows)
        if (r.quantity == quantity)
            return &r;
    return nullptr;
}

const std::vector<std::string>& table_ids()
{
    static const std::vector<std::string> ids{"scale", "repN", "repn", "TTI", "core", "poli", "face"};
    return ids;
}

Table build_table(std::string_view id, int L)
{
    TemperamentParams{L};
    if (id == "scale")
        return scale_table(L);
    if (id == "repN")
        return repN_table(L);
    if (id == "repn")
        return repn_table(L);
    if (id == "TTI")
        return tti_table(L);
    if (id == "core")
        return core_table(L);
    if (id == "poli")
        return poli_table(L);
    if (id == "face")
        return face_table(L);
    throw Error(ErrorCode::UnknownTable, "unknown table '" + std::string(id) + "'");
}

std::string to_csv(const Table& t)
{
    std::ostringstream out;
    out << "quantity,method";
    for (const auto& c : t.columns)
        out << ',' << c;
    out << '\n';
    for (const auto& r : t.rows) {
        out << r.quantity << ',' << r.method;
        for (const auto& c : r.cells)
            out << ',' << c;
        out << '\n';
    }
    return out.str();
}

namespace {

bool is_integer_text(const std::string& s)
{
    if (s.empty() || s.size() > 18)
        return false;
    const std::size_t start = s[0] == '-' ? 1 : 0;
    return start < s.size() && std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                           [](char ch) { return ch >= '0' && ch <= '9'; });
}

} // namespace

std::string to_json(const Table& t)
{
    using nlohmann::ordered_json;
    ordered_json provenance = ordered_json::object();
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        provenance[r.quantity] = r.method;
        ordered_json values = ordered_json::array();
        for (const auto& c : r.cells) {
            if (is_integer_text(c))
                values.push_back(std::stoll(c));
            else
                values.push_back(c);
        }
        rows.push_back({{"quantity", r.quantity}, {"method", r.method}, {"values", values}});
    }
    ordered_json doc;
    doc["meta"] = {{"L", t.L},
                   {"version", std::string(kVersion)},
                   {"table", t.id},
                   {"column", t.column_label},
                   {"columns", t.columns},
                   {"provenance", provenance}};
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

Table table_from_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    Table t;
    const auto& meta = doc.at("meta");
    t.id = meta.at("table").get<std::string>();
    t.L = meta.at("L").get<int>();
    t.column_label = meta.at("column").get<std::string>();
    t.columns = meta.at("columns").get<std::vector<std::string>>();
    for (const auto& r : doc.at("rows")) {
        TableRow row{r.at("quantity").get<std::string>(), r.at("method").get<std::string>(), {}};
        for (const auto& v : r.at("values"))
            row.cells.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace chordenum
