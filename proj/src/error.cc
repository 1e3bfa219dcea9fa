#include <gpos/error.hh>

namespace gpos
{
    auto name_of(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::SelfLoop:            return "SelfLoop";
            case ErrorKind::VertexOutOfRange:    return "VertexOutOfRange";
            case ErrorKind::Disconnected:        return "Disconnected";
            case ErrorKind::NotAnEdge:           return "NotAnEdge";
            case ErrorKind::TooLarge:            return "TooLarge";
            case ErrorKind::TooLargeForExact:    return "TooLargeForExact";
            case ErrorKind::EmptySet:            return "EmptySet";
            case ErrorKind::InvalidCover:        return "InvalidCover";
            case ErrorKind::DiameterTooSmall:    return "DiameterTooSmall";
            case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
            case ErrorKind::TooSmall:            return "TooSmall";
            case ErrorKind::TimedOut:            return "TimedOut";
            case ErrorKind::MalformedHeader:     return "MalformedHeader";
            case ErrorKind::MalformedEdge:       return "MalformedEdge";
            case ErrorKind::BadChecksumChar:     return "BadChecksumChar";
            case ErrorKind::UnknownFlag:         return "UnknownFlag";
            case ErrorKind::MalformedReport:     return "MalformedReport";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(name_of(kind)) + ": " + message),
        _kind(kind)
    {
    }
}
