#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "hpisot/substitution.hpp"

namespace fixtures {

inline hpisot::Substitution sub(const std::string& json) { return hpisot::parse_substitution(json); }

inline hpisot::Substitution fibonacci() { return sub(R"({"alphabet":["a","b"],"rules":{"a":"ab","b":"a"}})"); }
inline hpisot::Substitution thue_morse() { return sub(R"({"alphabet":["a","b"],"rules":{"a":"ab","b":"ba"}})"); }
inline hpisot::Substitution period_doubling() { return sub(R"({"alphabet":["a","b"],"rules":{"a":"ab","b":"aa"}})"); }
inline hpisot::Substitution tribonacci() {
    return sub(R"({"alphabet":["a","b","c"],"rules":{"a":"ab","b":"ac","c":"a"}})");
}
inline hpisot::Substitution intro_example() {
    return sub(R"({"alphabet":["1","2"],"rules":{"1":"21112","2":"121"}})");
}
inline hpisot::Substitution ex1_phi1() {
    return sub(R"({"alphabet":["A","B"],"rules":{"A":"ABABAAABA","B":"BAAABAABA"}})");
}
inline hpisot::Substitution ex2_phi1() {
    return sub(R"({"alphabet":["A","B"],"rules":{"A":"ABABAAABABABABA","B":"BAAABAABA"}})");
}
inline hpisot::Substitution ex3_phi1() {
    return sub(R"({"alphabet":["A","B","C"],"rules":{
        "A":"ABABAAABACBACBACBACBACBACBABAAABAAABAAA",
        "B":"BAAABAABACBACBACBACBAAACBAAACBAAA",
        "C":"CBACBACBABAAABAAABAAA"}})");
}
inline hpisot::Substitution ex1_phi2() {
    return sub(R"({"alphabet":["a1","a2","a3","b1","b2","b3"],"rules":{
        "a1":["a1","b2","a2","b1","a3","a1","a3","b3","a1"],
        "a2":["a2","b1","a3","b3","a1","a3","a1","b2","a2"],
        "a3":["a3","b3","a1","b2","a2","a2","a2","b1","a3"],
        "b1":["b1","a3","a1","a3","b3","a1","a3","b3","a1"],
        "b2":["b2","a2","a2","a2","b1","a3","a1","b2","a2"],
        "b3":["b3","a1","a3","a1","b2","a2","a2","b1","a3"]}})");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string source_path(const std::string& rel) { return std::string(HPISOT_SOURCE_DIR) + "/" + rel; }

}  // namespace fixtures
