// Sends the mass to zero for a few low states and prints what is left after
// the universal subtraction.
#include "hmw/limit_study.hpp"
#include "hmw/noncommutative.hpp"

#include <cstdio>

int main()
{
    const hmw::PhysicalParams p = hmw::presets::natural(2.0, 3.0, 0.25);
    const auto reduced          = hmw::reduced_spectrum_numeric(p, 200, 4);
    for(const auto& r : hmw::classify_states(p, 1, -1, 2))
    {
        std::printf("n=%d m=%+d  m~=%+.2f  %-9s", r.qn.n, r.qn.m, r.m_tilde, r.survives ? "survives" : "diverges");
        if(r.limit_value)
        {
            std::printf("  limit %.9f", *r.limit_value);
            if(r.survives)
            {
                std::printf("  reduced level %.9f", reduced[static_cast<std::size_t>(r.qn.m)]);
            }
        }
        else
        {
            std::printf("  last E-S %.6g", r.subtracted.back());
        }
        std::printf("\n");
    }
}
