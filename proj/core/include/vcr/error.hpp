#pragma once

#include <stdexcept>
#include <string>

namespace vcr {

enum class Errc {
    // Lookup / range
    NotFound,
    InvalidRange,
    // Index computation
    UndefinedDenominator,
    InconsistentPanel,
    NoData,
    DomainError,
    InsufficientData,
    NonContiguous,
    UndefinedBase,
    // Trend fitting
    SingularDesign,
    DegenerateSeries,
    // Ingest
    SchemaError,
    ParseError,
    DuplicateCell,
    InconsistentTaxonomy,
    MissingColumn,
    // Filesystem
    IoError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotFound: return "NotFound";
        case Errc::InvalidRange: return "InvalidRange";
        case Errc::UndefinedDenominator: return "UndefinedDenominator";
        case Errc::InconsistentPanel: return "InconsistentPanel";
        case Errc::NoData: return "NoData";
        case Errc::DomainError: return "DomainError";
        case Errc::InsufficientData: return "InsufficientData";
        case Errc::NonContiguous: return "NonContiguous";
        case Errc::UndefinedBase: return "UndefinedBase";
        case Errc::SingularDesign: return "SingularDesign";
        case Errc::DegenerateSeries: return "DegenerateSeries";
        case Errc::SchemaError: return "SchemaError";
        case Errc::ParseError: return "ParseError";
        case Errc::DuplicateCell: return "DuplicateCell";
        case Errc::InconsistentTaxonomy: return "InconsistentTaxonomy";
        case Errc::MissingColumn: return "MissingColumn";
        case Errc::IoError: return "IoError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace vcr
