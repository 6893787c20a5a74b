#include "hvb/report.hpp"

#include "hvb/format.hpp"

#include <nlohmann/json.hpp>

#include <regex>
#include <set>
#include <sstream>

namespace hvb {

namespace {

using Json = nlohmann::ordered_json;

const char* status(bool pass) { return pass ? "PASS" : "FAIL"; }

Json field_json(const ReportField::Value& v)
{
    return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string field_text(const ReportField::Value& v)
{
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(long long n) const { return std::to_string(n); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::vector<std::string>& xs) const
        {
            std::string out = "[";
            for (std::size_t k = 0; k < xs.size(); ++k)
                out += (k ? "; " : "") + xs[k];
            return out + "]";
        }
    };
    return std::visit(Visitor{}, v);
}

Json to_json(const Report& r)
{
    Json j;
    j["check"] = r.check;
    j["algebra"] = r.algebra;
    j["window"] = r.window;
    j["status"] = status(r.pass);
    for (const auto& f : r.fields)
        j[f.key] = field_json(f.value);
    Json ws = Json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(Json{{"input", w.input}, {"residual", to_string(w.residual)}});
    j["witnesses"] = ws;
    if (!r.axioms.empty()) {
        Json ax = Json::array();
        for (const auto& a : r.axioms)
            ax.push_back(to_json(a));
        j["axioms"] = ax;
    }
    return j;
}

void collect_half_integers(const Json& j, std::set<int>& ks)
{
    static const std::regex y(R"(Y\[(-?\d+)\])");
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        for (std::sregex_iterator it(s.begin(), s.end(), y), end; it != end; ++it)
            ks.insert(std::stoi((*it)[1].str()));
    } else if (j.is_structured()) {
        for (const auto& e : j)
            collect_half_integers(e, ks);
    }
}

void text(const Report& r, std::ostringstream& out, const std::string& indent)
{
    out << indent << r.check << " [" << r.algebra;
    if (r.window > 0)
        out << ", window " << r.window;
    out << "]: " << status(r.pass) << "\n";
    for (const auto& f : r.fields)
        out << indent << "  " << f.key << ": " << field_text(f.value) << "\n";
    for (const auto& w : r.witnesses)
        out << indent << "  witness " << w.input << ": " << to_string(w.residual) << "\n";
    for (const auto& a : r.axioms)
        text(a, out, indent + "  ");
}

}  // namespace

Report make_report(const Verdict& v)
{
    Report r;
    r.check = v.check;
    r.algebra = v.algebra;
    r.window = v.window;
    r.pass = v.pass;
    r.witnesses = v.witnesses;
    return r;
}

Report make_report(const BialgebraVerdict& v)
{
    Report r;
    r.check = "bialgebra";
    r.algebra = v.algebra;
    r.window = v.window;
    r.pass = v.pass();
    r.add("tags", v.tags);
    for (const auto& a : v.axioms)
        r.axioms.push_back(make_report(a));
    return r;
}

Report make_report(const H1Report& h1, const AlgebraSpec& alg)
{
    Report r;
    r.check = "h1";
    r.algebra = alg.id();
    r.window = h1.window;
    r.add("policy", std::string(h1.policy == H1Policy::Interior ? "interior" : "finite-support"));
    r.add("dimension", static_cast<long long>(h1.dimension));
    r.add("raw_nullity", static_cast<long long>(h1.raw_nullity));
    r.add("inner_rank", static_cast<long long>(h1.inner_rank));
    std::vector<std::string> classes;
    for (const auto& c : h1.stable_classes) {
        std::string s;
        for (const auto& [b, img] : *c.table_images())
            if (!img.is_zero())
                s += (s.empty() ? "" : ", ") + to_string(b) + " -> " + to_string(img);
        classes.push_back(s);
    }
    r.add("classes", classes);
    return r;
}

std::string render(const Report& report, ReportFormat format)
{
    if (format == ReportFormat::Text) {
        std::ostringstream out;
        text(report, out, "");
        return out.str();
    }
    Json j = to_json(report);
    std::set<int> ks;
    collect_half_integers(j, ks);
    if (!ks.empty()) {
        Json comments = Json::array();
        for (int k : ks)
            comments.push_back("Y[" + std::to_string(k) + "]: r=" + to_string(Scalar(2 * k + 1, 2)));
        j["comments"] = comments;
    }
    return j.dump(2) + "\n";
}

}  // namespace hvb
