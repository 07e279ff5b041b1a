#include "hyperalg/report_io.hpp"

#include <sstream>

namespace halg {

using nlohmann::json;

json report_to_json(const BlockReport& rep) {
    json j;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["tuple"] = json::array();
    for (const PairAJ& pr : rep.tuple)
        j["tuple"].push_back({{"a", pr.a},
                              {"two_j", pr.two_j},
                              {"case", std::string(1, case_letter(pr.cse))}});
    j["w"] = rep.w;
    j["dim"] = rep.dim;
    j["weight_index"] = rep.weight;
    j["pims"] = json::array();
    for (const PimReport& pim : rep.pims)
        j["pims"].push_back({{"eps", eps_to_string(pim.eps)},
                             {"dim", pim.dim},
                             {"loewy", pim.loewy},
                             {"rigid", pim.rigid}});
    j["symmetric"] = rep.symmetric;
    j["checks"] = json::object();
    for (auto& [k, v] : rep.checks) j["checks"][k] = v;
    return j;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json j = json::array();
    for (const CheckResult& c : checks)
        j.push_back({{"name", c.name},
                     {"grid", c.grid},
                     {"pass", c.pass},
                     {"detail", c.detail},
                     {"ms", c.ms}});
    return j;
}

std::string report_to_dot(const BlockReport& rep, uint32_t p) {
    XSet xs = x_set(rep.tuple, p);
    std::ostringstream os;
    for (const PimReport& pim : rep.pims) {
        os << "digraph \"pim_" << tuple_to_string(rep.tuple) << "_"
           << eps_to_string(pim.eps) << "\" {\n";
        auto nodes = pim_basis(pim.eps, xs);
        for (const EpsVec& t : nodes)
            os << "  \"" << eps_to_string(t) << "\" [label=\"" << eps_to_string(t)
               << " W=" << hamming_weight(t) << "\"];\n";
        for (const EpsVec& t : nodes)
            for (uint32_t s = 0; s < rep.r; ++s) {
                if (t[s] != 0 || beta_of(rep.tuple[s], p) == 0) continue;
                EpsVec up = t;
                up[s] = 1;
                os << "  \"" << eps_to_string(t) << "\" -> \"" << eps_to_string(up)
                   << "\" [label=\"" << s << "\"];\n";
            }
        os << "}\n";
    }
    return os.str();
}

std::string report_to_text(const BlockReport& rep) {
    std::ostringstream os;
    os << "block (" << tuple_to_string(rep.tuple) << ")  w=" << rep.w
       << "  dim=" << rep.dim << "  weight=" << rep.weight
       << "  symmetric=" << (rep.symmetric ? "yes" : "no") << "\n";
    for (const PimReport& pim : rep.pims) {
        os << "  pim eps=" << eps_to_string(pim.eps) << " dim=" << pim.dim << " loewy=[";
        for (size_t i = 0; i < pim.loewy.size(); ++i)
            os << (i ? "," : "") << pim.loewy[i];
        os << "] rigid=" << (pim.rigid ? "yes" : "no") << "\n";
    }
    for (auto& [k, v] : rep.checks)
        os << "  check " << k << ": " << (v ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace halg
