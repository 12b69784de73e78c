/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_ERRORS_HH
#define METRICDIM_GUARD_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metricdim
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class DisconnectedGraph : public Error
    {
        public:
            DisconnectedGraph() : Error("graph is not connected") { }
    };

    class SelfLoop : public Error
    {
        public:
            explicit SelfLoop(unsigned v) : Error("self loop at vertex " + std::to_string(v)) { }
    };

    class DuplicateEdge : public Error
    {
        public:
            DuplicateEdge(unsigned u, unsigned v) :
                Error("duplicate edge " + std::to_string(u) + " " + std::to_string(v)) { }
    };

    class VertexOutOfRange : public Error
    {
        public:
            VertexOutOfRange(unsigned v, unsigned n) :
                Error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n)) { }
    };

    class InvalidParams : public Error
    {
        public:
            using Error::Error;
    };

    class InstanceTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class OrderTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidTarget : public Error
    {
        public:
            using Error::Error;
    };

    class EqualDimensionsUnsupported : public Error
    {
        public:
            EqualDimensionsUnsupported() :
                Error("equal metric and edge metric dimension targets are not supported by the construction") { }
    };

    class OrderTooSmall : public Error
    {
        public:
            OrderTooSmall(std::size_t order, std::size_t minimum) :
                Error("order " + std::to_string(order) + " is below the construction minimum n0=" + std::to_string(minimum)),
                _minimum(minimum)
            {
            }

            auto minimum_order() const -> std::size_t { return _minimum; }

        private:
            std::size_t _minimum;
    };
}

#endif
