#pragma once

#include "segrekit/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segrekit {

enum class Status { Pass, Fail, Info };

const char* status_name(Status s);

struct Report {
    std::string claim;
    Status status = Status::Info;
    std::optional<int> residual_order;
    std::optional<Json> witness;
    std::string detail;  // human-readable, not part of the structured form

    static Report pass(std::string claim, std::string detail = {});
    // a failing report always carries a witness
    static Report fail(std::string claim, Json witness, std::string detail = {});
    static Report info(std::string claim, std::string detail = {});

    bool ok() const { return status != Status::Fail; }
    std::string line() const;
};

Json to_json(const Report& r);
bool all_pass(const std::vector<Report>& rs);

}  // namespace segrekit
