#include "hbraces/render.hpp"

#include <map>

#include <json.hpp>

#include "hbraces/error.hpp"

namespace hbraces {

using nlohmann::json;

Format parse_format(std::string_view name)
{
    if (name == "text")
        return Format::text;
    if (name == "latex")
        return Format::latex;
    if (name == "json")
        return Format::json;
    throw UsageError("unknown output format '" + std::string(name) + "'");
}

namespace {

struct Notation {
    std::string nabla_open;
    std::string (*gen)(std::uint32_t);
    std::string (*coeff)(const Scalar&); // magnitude, never 1
};

std::string word_string(const Word& w, const Notation& notation)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            out += ' ';
        const Atom& a = w[i];
        if (a.is_gen())
            out += notation.gen(a.generator().index);
        else
            out += notation.nabla_open + word_string(a.inner(), notation) + ")";
    }
    return out;
}

std::string join_terms(const Expr& e, const Notation& notation)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        const bool negative = c.sign() < 0;
        const Scalar magnitude = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!(magnitude == Scalar(1)))
            out += notation.coeff(magnitude) + " ";
        out += word_string(w, notation);
        first = false;
    }
    return out;
}

std::string text_gen(std::uint32_t i) { return "a" + std::to_string(i); }
std::string text_coeff(const Scalar& s) { return s.to_string(); }
std::string latex_gen(std::uint32_t i) { return "a_{" + std::to_string(i) + "}"; }
std::string latex_coeff(const Scalar& s)
{
    if (s.is_integer())
        return s.numerator_string();
    return "\\frac{" + s.numerator_string() + "}{" + s.denominator_string() + "}";
}

json atom_json(const Atom& a)
{
    if (a.is_gen())
        return json{{"gen", a.generator().index}};
    json inner = json::array();
    for (const Atom& x : a.inner())
        inner.push_back(atom_json(x));
    return json{{"nabla", std::move(inner)}};
}

void collect_generators(const Word& w, std::map<std::uint32_t, int>& degrees)
{
    for (const Atom& a : w) {
        if (a.is_nabla()) {
            collect_generators(a.inner(), degrees);
            continue;
        }
        auto [it, inserted] = degrees.emplace(a.generator().index, a.generator().degree);
        if (!inserted && it->second != a.generator().degree)
            throw ContractViolation("generator a" + std::to_string(a.generator().index) +
                                    " appears with two different degrees");
    }
}

Atom parse_atom(const json& j, const std::map<std::uint32_t, int>& degrees);

Word parse_word(const json& j, const std::map<std::uint32_t, int>& degrees)
{
    if (!j.is_array() || j.empty())
        throw ParseError("word must be a nonempty array of atoms");
    Word w;
    for (const json& a : j)
        w.push_back(parse_atom(a, degrees));
    return w;
}

Atom parse_atom(const json& j, const std::map<std::uint32_t, int>& degrees)
{
    if (!j.is_object() || j.size() != 1)
        throw ParseError("atom must be {\"gen\": i} or {\"nabla\": [...]}");
    if (j.contains("gen")) {
        const json& idx = j.at("gen");
        if (!idx.is_number_unsigned())
            throw ParseError("generator index must be a nonnegative integer");
        const auto index = idx.get<std::uint32_t>();
        auto it = degrees.find(index);
        if (it == degrees.end())
            throw ParseError("generator a" + std::to_string(index) + " has no declared degree");
        return Atom::gen(Generator{index, it->second});
    }
    if (j.contains("nabla"))
        return Atom::nabla(parse_word(j.at("nabla"), degrees));
    throw ParseError("unknown atom kind");
}

} // namespace

std::string render_text(const Expr& e)
{
    static const Notation notation{"∇(", text_gen, text_coeff};
    return join_terms(e, notation);
}

std::string render_latex(const Expr& e)
{
    static const Notation notation{"\\nabla(", latex_gen, latex_coeff};
    return join_terms(e, notation);
}

std::string render_json(const Expr& e)
{
    std::map<std::uint32_t, int> degrees;
    json terms = json::array();
    for (const auto& [w, c] : e.terms()) {
        collect_generators(w, degrees);
        json word = json::array();
        for (const Atom& a : w)
            word.push_back(atom_json(a));
        terms.push_back(json{{"coeff", c.to_string()}, {"word", std::move(word)}});
    }
    json gens = json::array();
    for (const auto& [index, degree] : degrees)
        gens.push_back(json{{"index", index}, {"degree", degree}});
    json doc;
    doc["flavor"] = e.flavor() == Flavor::commutative ? "commutative" : "noncommutative";
    doc["generators"] = std::move(gens);
    doc["terms"] = std::move(terms);
    return doc.dump();
}

std::string render(const Expr& e, Format format)
{
    switch (format) {
    case Format::text: return render_text(e);
    case Format::latex: return render_latex(e);
    case Format::json: return render_json(e);
    }
    return {};
}

Expr parse_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    try {
        const std::string flavor_name = doc.at("flavor").get<std::string>();
        Flavor flavor;
        if (flavor_name == "commutative")
            flavor = Flavor::commutative;
        else if (flavor_name == "noncommutative")
            flavor = Flavor::noncommutative;
        else
            throw ParseError("unknown flavor '" + flavor_name + "'");

        std::map<std::uint32_t, int> degrees;
        if (doc.contains("generators"))
            for (const json& g : doc.at("generators"))
                degrees[g.at("index").get<std::uint32_t>()] = g.at("degree").get<int>();

        std::vector<RawTerm> raw;
        for (const json& t : doc.at("terms")) {
            const json& coeff = t.at("coeff");
            if (!coeff.is_string())
                throw ParseError("coefficients must be exact rational strings");
            raw.push_back(RawTerm{parse_word(t.at("word"), degrees), Scalar::parse(coeff.get<std::string>())});
        }
        return normalize(raw, flavor);
    } catch (const json::exception& err) {
        throw ParseError(std::string("malformed expression document: ") + err.what());
    }
}

} // namespace hbraces
