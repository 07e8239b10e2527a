#ifndef HMW_PARAMS_IO_HPP
#define HMW_PARAMS_IO_HPP

#include "hmw/params.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace hmw {

/// Parameter file: a flat JSON object with numeric keys mu, d, lambda, rho, K
/// and optionally hbar, c (default 1). Unknown keys are rejected.
inline PhysicalParams params_from_json(const nlohmann::json& j)
{
    if(!j.is_object())
    {
        throw ParameterError("parameter file must hold a JSON object");
    }
    for(const auto& [key, value] : j.items())
    {
        if(key != "mu" && key != "d" && key != "lambda" && key != "rho" && key != "K" && key != "hbar" &&
           key != "c")
        {
            throw ParameterError("parameter file: unknown key '" + key + "'");
        }
        if(!value.is_number())
        {
            throw ParameterError("parameter file: '" + key + "' must be a number");
        }
    }
    auto required = [&j](const char* key) {
        if(!j.contains(key))
        {
            throw ParameterError(std::string("parameter file: missing '") + key + "'");
        }
        return j.at(key).get<double>();
    };
    PhysicalParams p;
    p.mu     = required("mu");
    p.d      = required("d");
    p.lambda = required("lambda");
    p.rho    = required("rho");
    p.K      = required("K");
    p.hbar   = j.value("hbar", 1.0);
    p.c      = j.value("c", 1.0);
    return p;
}

inline PhysicalParams load_params(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if(!in)
    {
        throw ParameterError("cannot open parameter file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(buf.str());
    }
    catch(const nlohmann::json::parse_error& e)
    {
        throw ParameterError("malformed parameter file '" + path.string() + "': " + e.what());
    }
    return params_from_json(j);
}

inline nlohmann::ordered_json to_json(const PhysicalParams& p)
{
    return {{"mu", p.mu}, {"d", p.d}, {"lambda", p.lambda}, {"rho", p.rho},
            {"K", p.K},   {"hbar", p.hbar}, {"c", p.c}};
}

} // namespace hmw

#endif // HMW_PARAMS_IO_HPP
