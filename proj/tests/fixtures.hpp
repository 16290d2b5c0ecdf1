#pragma once

// Sextics and fields used across the test suites.
namespace fixtures {

inline constexpr const char* kGdk = "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4";

// sigma = 4, seven lines and seven conics
inline constexpr const char* kSeven =
    "X0^5*X1 + X0^5*X2 + X0^3*X1^3 + X0^3*X1^2*X2 + X0^3*X1*X2^2 + X0^3*X2^3 + X0^2*X1*X2^3 + X0*X2^5 + "
    "X1^5*X2";
inline constexpr const char* kSevenField = "t^14+t^13+t^12+t^8+t^5+t^4+t^3+t^2+1";
inline constexpr const char* kSevenP0[2] = {"a^13+a^11+a^10+a^9+a^7+a^4+a^3+a^2",
                                            "a^12+a^11+a^9+a^5+a^3+a^2+a"};
inline constexpr const char* kSevenP7[2] = {"a^12+a^11+a^10+a^7+a^6+a^5+a^4+a",
                                            "a^13+a^11+a^9+a^5+a^4+a^3+a^2+a"};

// sigma = 10: [0,0,1] plus one orbit of length 20
inline constexpr const char* kTrivial = "X0^5*X2 + X0^3*X1^3 + X0^3*X2^3 + X0*X1*X2^4 + X1^5*X2";
inline constexpr const char* kTrivialField = "t^20+t^19+t^18+t^15+t^10+t^7+t^6+t^4+1";
inline constexpr const char* kTrivialP[2] = {"a^19+a^18+a^16+a^15+a^8+a^3+a^2+a",
                                             "a^19+a^17+a^16+a^15+a^14+a^9+a^8+a^7+a^5+a^3+a"};

// sigma = 7, seven splitting pencils
inline constexpr const char* kPencils = "X0^5*X1 + X0^3*X1^2*X2 + X0*X2^5 + X1^5*X2";
inline constexpr const char* kPencilsField = "t^14+t^13+t^12+t^8+t^5+t^4+t^3+t^2+1";
inline constexpr const char* kPencilsP0[2] = {"a^13+a^12+a^10+a^9+a^8+a^3+a^2", "a^13+a^8+a^2"};
inline constexpr const char* kPencilsP14[2] = {"a^13+a^12+a^11+a^10+a^9+a^8+a^7+a^6+a^2", "a^10+a^9+a^7+a^4"};

// same (sigma, l, q, e) as kSeven but a different class
inline constexpr const char* kSevenTwin =
    "X0^5*X2 + X0^4*X1*X2 + X0^3*X1^2*X2 + X0^2*X1^3*X2 + X0*X1^4*X2 + X0*X1^3*X2^2 + X0*X1*X2^4";

// sigma = 2, points over F_16
inline constexpr const char* kSigma2 = "X0^4*X1*X2 + X0^3*X1^3 + X0*X1^4*X2 + X0*X1*X2^4";

// sigma = 3, 45 irreducible weight-8 words
inline constexpr const char* kConics45 =
    "X0^5*X2 + X0^4*X1*X2 + X0^3*X1^3 + X0^3*X1^2*X2 + X0^3*X2^3 + X0^2*X1^3*X2 + X0*X1^3*X2^2 + "
    "X0*X1*X2^4 + X1^5*X2";
inline constexpr const char* kConics45Field = "t^6+t^5+t^3+t^2+1";

// X0*X1*X2*(X0^7 + X1^7 + X2^7), degree 10
inline constexpr const char* kGdk8 = "X0^8*X1*X2 + X0*X1^8*X2 + X0*X1*X2^8";

}  // namespace fixtures
