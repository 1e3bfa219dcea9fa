#ifndef GPOS_ERROR_HH
#define GPOS_ERROR_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpos
{
    enum class ErrorKind
    {
        SelfLoop,
        VertexOutOfRange,
        Disconnected,
        NotAnEdge,
        TooLarge,
        TooLargeForExact,
        EmptySet,
        InvalidCover,
        DiameterTooSmall,
        ParameterOutOfRange,
        TooSmall,
        TimedOut,
        MalformedHeader,
        MalformedEdge,
        BadChecksumChar,
        UnknownFlag,
        MalformedReport
    };

    auto name_of(ErrorKind kind) -> std::string_view;

    /// Every failure raised by the library carries a kind so callers (and the
    /// CLI exit-code mapping) can dispatch without parsing messages.
    class Error : public std::runtime_error
    {
        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind
            {
                return _kind;
            }

        private:
            ErrorKind _kind;
    };
}

#endif
