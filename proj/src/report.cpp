#include "segrekit/report.hpp"

#include <algorithm>

namespace segrekit {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
    }
    return "info";
}

Report Report::pass(std::string claim, std::string detail)
{
    Report r;
    r.claim = std::move(claim);
    r.status = Status::Pass;
    r.detail = std::move(detail);
    return r;
}

Report Report::fail(std::string claim, Json witness, std::string detail)
{
    Report r;
    r.claim = std::move(claim);
    r.status = Status::Fail;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

Report Report::info(std::string claim, std::string detail)
{
    Report r;
    r.claim = std::move(claim);
    r.status = Status::Info;
    r.detail = std::move(detail);
    return r;
}

std::string Report::line() const
{
    std::string s = std::string(status_name(status)) + "  " + claim;
    if (residual_order)
        s += "  [order " + std::to_string(*residual_order) + "]";
    if (!detail.empty())
        s += "  " + detail;
    return s;
}

Json to_json(const Report& r)
{
    Json j;
    j["claim"] = r.claim;
    j["status"] = status_name(r.status);
    j["residual_order"] = r.residual_order ? Json(*r.residual_order) : Json(nullptr);
    j["witness"] = r.witness ? *r.witness : Json(nullptr);
    return j;
}

bool all_pass(const std::vector<Report>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.ok(); });
}

}  // namespace segrekit
