#pragma once

#include <stdexcept>
#include <string>

namespace ssd {

// Structured failure reasons. The names() strings are stable identifiers used
// on the wire and in logs.
enum class errc {
    not_owner,
    zero_amount,
    insufficient_balance,
    overflow,
    duplicate_stamp_code,
    unknown_stamp_code,
    zero_price,
    inactive_stamp,
    bad_signature,
    duplicate_pay_code,
    unknown_pay_code,
    empty_document,
    bad_nonce,
    bad_linkage,
    wrong_proposer,
    bad_proposer_sig,
    state_root_mismatch,
    invalid_period,
    not_my_turn,
    recirculation_forbidden,
    timestamp_out_of_range,
    stamp_code_too_long,
    unknown_block,
    bad_key,
    bad_point,
    bad_params,
    parse_error,
    io_error,
    invariant_breach,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    explicit error(errc code, const std::string& detail = "");
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& detail = "");

}  // namespace ssd
