#include "ssd/errors.hpp"

namespace ssd {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_owner: return "NotOwner";
        case errc::zero_amount: return "ZeroAmount";
        case errc::insufficient_balance: return "InsufficientBalance";
        case errc::overflow: return "Overflow";
        case errc::duplicate_stamp_code: return "DuplicateStampCode";
        case errc::unknown_stamp_code: return "UnknownStampCode";
        case errc::zero_price: return "ZeroPrice";
        case errc::inactive_stamp: return "InactiveStamp";
        case errc::bad_signature: return "BadSignature";
        case errc::duplicate_pay_code: return "DuplicatePayCode";
        case errc::unknown_pay_code: return "UnknownPayCode";
        case errc::empty_document: return "EmptyDocument";
        case errc::bad_nonce: return "BadNonce";
        case errc::bad_linkage: return "BadLinkage";
        case errc::wrong_proposer: return "WrongProposer";
        case errc::bad_proposer_sig: return "BadProposerSig";
        case errc::state_root_mismatch: return "StateRootMismatch";
        case errc::invalid_period: return "InvalidPeriod";
        case errc::not_my_turn: return "NotMyTurn";
        case errc::recirculation_forbidden: return "RecirculationForbidden";
        case errc::timestamp_out_of_range: return "TimestampOutOfRange";
        case errc::stamp_code_too_long: return "StampCodeTooLong";
        case errc::unknown_block: return "UnknownBlock";
        case errc::bad_key: return "BadKey";
        case errc::bad_point: return "BadPoint";
        case errc::bad_params: return "BadParams";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::invariant_breach: return "InvariantBreach";
    }
    return "Unknown";
}

error::error(errc code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                        : std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

void fail(errc code, const std::string& detail) {
    throw error(code, detail);
}

}  // namespace ssd
