// Copyright 2026 The fadw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference values produced by the extended-precision oracle (two methods,
// cross-validated to <= 1e-31) and rounded to double.  The 33-digit
// originals are kept in the comments; regenerate with the oracle library if
// the constants ever need to change.

#pragma once

#include "fadw/faddeeva.hpp"

namespace fadw::testvals {

// w(2+1i) = 1.402395813662779436959595061142718e-01 2.222134401798991026057945004351046e-01
inline constexpr Complex kW2p1i{0.14023958136627795, 0.22221344017989911};

// w(0+1e-6 i) = 9.999988716218329037352248869745046e-01 0
inline constexpr Complex kW0p1em6i{0.99999887162183287, 0.0};

// w(5+5i) = 5.696543988817697896740047717340968e-02 5.583874277539102823315201734825528e-02
inline constexpr Complex kW5p5i{0.056965439888176976, 0.055838742775391026};

// w(15+15i) = 1.882714532513675645739127604725211e-02 1.878535427799564677390026810716659e-02
inline constexpr Complex kW15p15i{0.018827145325136758, 0.018785354277995648};

// w(100) = 1.135e-4343 + 5.642177972594137772558691866270850e-03 i
// (the real part underflows double)
inline constexpr Complex kW100{0.0, 0.005642177972594138};

// w(20000+1i) = 1.410473960632483163753071384991128e-09 2.820947914212596515528264730321865e-05
inline constexpr Complex kW20000p1i{1.4104739606324832e-09, 2.8209479142125966e-05};

// w(3+5e-7i) = 1.234490864537201006143660493773362e-04 2.011573166673623401796604012098235e-01
inline constexpr Complex kW3pym7i{0.00012344908645372011, 0.20115731666736233};

// w(1-2i) = -2.647605877819920685747750876617185e+01 -3.030857111674330725835945900862681e+01
inline constexpr Complex kW1m2i{-26.476058778199207, -30.308571116743309};

// w(7-2i) = -2.185339668743829137821624645137086e-02 7.500963593542481548318642473341321e-02
inline constexpr Complex kW7m2i{-0.021853396687438291, 0.075009635935424812};

// w(-2+1i) = conj(w(2+1i))
inline constexpr Complex kWm2p1i{0.14023958136627795, -0.22221344017989911};

// w(i) = exp(1) erfc(1) = 4.275835761558070044107503444905152e-01
inline constexpr Complex kW0p1i{0.427583576155807, 0.0};

// w(1+1i) = 3.047442052569125924571388410695950e-01 2.082189382028316272874373472547156e-01
inline constexpr Complex kW1p1i{0.30474420525691259, 0.20821893820283163};

// psi(1+1.5i), defaults, recomputed term by term at quad precision:
// 3.678794411669683345148412524669585e-01 6.071577058336445569510183893102553e-01
inline constexpr Complex kPsi1p15i{0.36787944116696836, 0.60715770583364459};

// erf(1) = 8.427007929497148693412206350826093e-01
inline constexpr Complex kErf1{0.84270079294971489, 0.0};

// erf(2+3i) = -2.082946142761456838910308845198111e+01 8.687318271470163144428078754541871e+00
inline constexpr Complex kErf2p3i{-20.829461427614568, 8.6873182714701631};

// daw(x) values
inline constexpr double kDaw05 = 0.42443638350202229;  // 4.244363835020222959340423524896696e-01
inline constexpr double kDaw1 = 0.5380795069127684;    // 5.380795069127684191363874204075568e-01
inline constexpr double kDaw3 = 0.1782710306105583;    // 1.782710306105582873425994922405126e-01
inline constexpr double kDaw10 = 0.050253847187598531; // 5.025384718759852803274841986071548e-02
inline constexpr double kDaw50 = 0.010002001201201684; // 1.000200120120168303067014934894553e-02

// Fresnel integral values
// F(1) = 7.798934003768228294742064136526901e-01 4.382591473903547660767566966251526e-01
inline constexpr Complex kFresnel1{0.77989340037682287, 0.43825914739035476};
// F(2) = 4.882534060753407545002235033572610e-01 3.434156783636982421953008159580685e-01
inline constexpr Complex kFresnel2{0.48825340607534073, 0.34341567836369824};

// exp(100) erfc(10) = w(10i) = 5.614099274382258585751738722046831e-02
inline constexpr Complex kErfcx10{0.056140992743822588, 0.0};

// Expansion coefficients at defaults, closed forms at quad precision:
// A_1 = 6.658370242547612547215461372028533e-01
// B_1 = 8.485089220429973413277598227691914e-01
inline constexpr double kCoeffA1 = 0.66583702425476121;
inline constexpr double kCoeffB1 = 0.84850892204299733;

}  // namespace fadw::testvals
