#pragma once

// Generated by tools/gen_reference_tables.py; do not edit.

namespace reference {

struct Point {
  double tau;
  double s;
  double value;
};

inline constexpr Point kBesselJ[] = {
    {-1.5, 0.1, -2.5357166629911094089e+1},
    {-1.5, 0.5, -2.5214655504213378514},
    {-1.5, 1, -1.1024955751601791699},
    {-1.5, 2.5, -1.4029358516674293189e-1},
    {-1.5, 5, 3.2192444296114012985e-1},
    {-1.5, 6.5, -1.1434295709283581644e-1},
    {-1.5, 7.5, -2.8674822724953957851e-1},
    {-1.5, 10, 1.584346223881902965e-1},
    {-1.5, 15, -1.2353398776195210813e-1},
    {-1.5, 20, -1.6652110909428296334e-1},
    {-1.5, 30, 1.4318064368377218831e-1},
    {-1.5, 40, -9.1897495997623692032e-2},
    {-1.5, 50, 2.7428136761913821705e-2},
    {-1, 0.1, -4.9937526036241997556e-2},
    {-1, 0.5, -2.4226845767487388638e-1},
    {-1, 1, -4.4005058574493351596e-1},
    {-1, 2.5, -4.9709410246427403801e-1},
    {-1, 5, 3.2757913759146522204e-1},
    {-1, 6.5, 1.5384130140997183711e-1},
    {-1, 7.5, -1.3524842757970550518e-1},
    {-1, 10, -4.347274616886143667e-2},
    {-1, 15, -2.0510403861352276115e-1},
    {-1, 20, -6.6833124175850045579e-2},
    {-1, 30, 1.1875106261662293652e-1},
    {-1, 40, -1.2603831803758499921e-1},
    {-1, 50, 9.7511828125175137661e-2},
    {-0.5, 0.1, 2.5105273689585093144},
    {-0.5, 0.5, 9.9024588024340488002e-1},
    {-0.5, 1, 4.3109886801837607952e-1},
    {-0.5, 2.5, -4.0427830223905687344e-1},
    {-0.5, 5, 1.0121770918510839957e-1},
    {-0.5, 6.5, 3.0562902799737960361e-1},
    {-0.5, 7.5, 1.0099089933025172416e-1},
    {-0.5, 10, -2.1170886633139815292e-1},
    {-0.5, 15, -1.5650551590730857072e-1},
    {-0.5, 20, 7.280690478506184855e-2},
    {-0.5, 30, 2.2470290598831024825e-2},
    {-0.5, 40, -8.4138655676395420896e-2},
    {-0.5, 50, 1.0888475635053954314e-1},
    {0, 0.1, 9.9750156206604003228e-1},
    {0, 0.5, 9.3846980724081290423e-1},
    {0, 1, 7.6519768655796655145e-1},
    {0, 2.5, -4.8383776468197996327e-2},
    {0, 5, -1.7759677131433830435e-1},
    {0, 6.5, 2.600946055816063814e-1},
    {0, 7.5, 2.6633965788037839687e-1},
    {0, 10, -2.459357644513483352e-1},
    {0, 15, -1.4224472826780773234e-2},
    {0, 20, 1.6702466434058315473e-1},
    {0, 30, -8.6367983581040211336e-2},
    {0, 40, 7.3668905842372895535e-3},
    {0, 50, 5.5812327669251815005e-2},
    {0.5, 0.1, 2.5189294032600094573e-1},
    {0.5, 0.5, 5.4097378993452809133e-1},
    {0.5, 1, 6.7139670714180309042e-1},
    {0.5, 2.5, 3.0200490606236568126e-1},
    {0.5, 5, -3.4216798479816180976e-1},
    {0.5, 6.5, 6.7323106631700492807e-2},
    {0.5, 7.5, 2.7328277400550601529e-1},
    {0.5, 10, -1.3726373575505048121e-1},
    {0.5, 15, 1.3396768882243934618e-1},
    {0.5, 20, 1.6288076385502987091e-1},
    {0.5, 30, -1.4392965337039988914e-1},
    {0.5, 40, 9.4000962389533577555e-2},
    {0.5, 50, -2.9605831888924612568e-2},
    {1, 0.1, 4.9937526036241997556e-2},
    {1, 0.5, 2.4226845767487388638e-1},
    {1, 1, 4.4005058574493351596e-1},
    {1, 2.5, 4.9709410246427403801e-1},
    {1, 5, -3.2757913759146522204e-1},
    {1, 6.5, -1.5384130140997183711e-1},
    {1, 7.5, 1.3524842757970550518e-1},
    {1, 10, 4.347274616886143667e-2},
    {1, 15, 2.0510403861352276115e-1},
    {1, 20, 6.6833124175850045579e-2},
    {1, 30, -1.1875106261662293652e-1},
    {1, 40, 1.2603831803758499921e-1},
    {1, 50, -9.7511828125175137661e-2},
    {2.5, 0.1, 1.6808871900334127033e-4},
    {2.5, 0.5, 9.2364078193797244999e-3},
    {2.5, 1, 4.9496810228477942271e-2},
    {2.5, 2.5, 3.2809141153443809388e-1},
    {2.5, 5, 2.4037720111131735285e-1},
    {2.5, 6.5, -2.0360231908267802635e-1},
    {2.5, 7.5, -2.991040524573130508e-1},
    {2.5, 10, 1.9665848358181841265e-1},
    {2.5, 15, -1.0088034979001177408e-1},
    {2.5, 20, -1.7258019384387642416e-1},
    {2.5, 30, 1.4120285879928212036e-1},
    {2.5, 40, -8.751431140932354553e-2},
    {2.5, 50, 2.3037219509625530445e-2},
    {4, 0.1, 2.6028648545684032338e-7},
    {4, 0.5, 1.6073647636428759684e-4},
    {4, 1, 2.4766389641099550438e-3},
    {4, 2.5, 7.3781880054255232704e-2},
    {4, 5, 3.9123236045864817782e-1},
    {4, 6.5, 2.7480273098228453256e-1},
    {4, 7.5, 2.3824679971022012821e-2},
    {4, 10, -2.1960268610200853513e-1},
    {4, 15, -1.1917898110329952854e-1},
    {4, 20, 1.3067093355486324749e-1},
    {4, 30, -5.2609000321320352293e-2},
    {4, 40, -1.7856747643515080881e-2},
    {4, 50, 7.0840977281654952354e-2},
    {6, 0.1, 2.1693639603760023806e-11},
    {6, 0.5, 3.3606846286188487954e-7},
    {6, 1, 2.0938338002389269966e-5},
    {6, 2.5, 4.2246204837576468418e-3},
    {6, 5, 1.3104873178169200229e-1},
    {6, 6.5, 2.9991323380275055851e-1},
    {6, 7.5, 3.5414052691237859874e-1},
    {6, 10, -1.4458842084785105318e-2},
    {6, 15, 2.0614973747998589699e-1},
    {6, 20, -5.5086049563665760182e-2},
    {6, 30, 4.8622351506279932981e-3},
    {6, 40, 4.8500114137794527629e-2},
    {6, 50, -8.7121026820968880282e-2},
};

inline constexpr Point kBesselI[] = {
    {-0.5, 0.1, 2.535758701187412504},
    {-0.5, 1, 1.2312002145929674465},
    {-0.5, 2.5, 3.094515804116306263},
    {-0.5, 5, 2.647995176430595072e+1},
    {-0.5, 10, 2.7787846153295749521e+3},
    {-0.5, 20, 4.3279746272428928437e+7},
    {-0.5, 30, 7.7836606884044640419e+11},
    {0, 0.1, 1.0025015629340956014},
    {0, 1, 1.2660658777520083356},
    {0, 2.5, 3.2898391440501230357},
    {0, 5, 2.7239871823604446895e+1},
    {0, 10, 2.8157166284662544715e+3},
    {0, 20, 4.3558282559553533272e+7},
    {0, 30, 7.8167229782397748972e+11},
    {0.5, 0.1, 2.5273398460013197344e-1},
    {0.5, 1, 9.3767488824548764672e-1},
    {0.5, 2.5, 3.0530935381967184362},
    {0.5, 5, 2.6477547497559065205e+1},
    {0.5, 10, 2.778784603874571024e+3},
    {0.5, 20, 4.3279746272428928069e+7},
    {0.5, 30, 7.7836606884044640419e+11},
    {1, 0.1, 5.0062526047092692114e-2},
    {1, 1, 5.6515910399248502721e-1},
    {1, 2.5, 2.5167162452886984415},
    {1, 5, 2.4335642142450527199e+1},
    {1, 10, 2.6709883037012546543e+3},
    {1, 20, 4.2454973385127770181e+7},
    {1, 30, 7.6853203893895699949e+11},
    {2, 0.1, 1.251041992241759124e-3},
    {2, 1, 1.3574766976703828118e-1},
    {2, 2.5, 1.2764661478191642825},
    {2, 5, 1.7505614966624236015e+1},
    {2, 10, 2.2815189677260035406e+3},
    {2, 20, 3.9312785221040756254e+7},
    {2, 30, 7.3043682856138035642e+11},
    {3.5, 0.1, 2.4043186485031967043e-6},
    {3.5, 1, 8.0307803322385630317e-3},
    {3.5, 2.5, 2.6295944565446734861e-1},
    {3.5, 5, 7.4175601261115550817},
    {3.5, 10, 1.4866497762461500152e+3},
    {3.5, 20, 3.1837663351655530593e+7},
    {3.5, 30, 6.3523319729256431542e+11},
};

// exp(-s) I_tau(s)
inline constexpr Point kBesselIScaled[] = {
    {-0.5, 40, 6.3078313050504001206e-2},
    {-0.5, 100, 3.9894228040143267794e-2},
    {-0.5, 700, 1.5078600877302686163e-2},
    {-0.5, 1000, 1.2615662610100800241e-2},
    {0, 40, 6.3278279875235330262e-2},
    {0, 100, 3.9944379299096682648e-2},
    {0, 700, 1.5081295651531357587e-2},
    {0, 1000, 1.2617240455891256586e-2},
    {0.5, 40, 6.3078313050504001206e-2},
    {0.5, 100, 3.9894228040143267794e-2},
    {0.5, 700, 1.5078600877302686163e-2},
    {0.5, 1000, 1.2615662610100800241e-2},
    {1, 40, 6.2482229074442060748e-2},
    {1, 100, 3.9744153025130252674e-2},
    {1, 700, 1.5070519444716846949e-2},
    {1, 1000, 1.261093025692862947e-2},
    {2, 40, 6.0154168421513227225e-2},
    {2, 100, 3.9149496238594077594e-2},
    {2, 700, 1.503823702454645231e-2},
    {2, 1000, 1.2592018595377399327e-2},
    {3.5, 40, 5.4193141298155664161e-2},
    {3.5, 100, 3.7559817286374284479e-2},
    {3.5, 700, 1.4949816657334548033e-2},
    {3.5, 1000, 1.25401576801444078e-2},
};

struct Zero {
  double tau;
  int k;
  double value;
};

inline constexpr Zero kBesselZeros[] = {
    {-0.5, 1, 1.5707963267948966192},
    {-0.5, 2, 4.7123889803846898577},
    {-0.5, 3, 7.8539816339744830962},
    {-0.5, 4, 1.0995574287564276335e+1},
    {-0.5, 5, 1.4137166941154069573e+1},
    {0, 1, 2.4048255576957727686},
    {0, 2, 5.5200781102863106496},
    {0, 3, 8.653727912911012217},
    {0, 4, 1.1791534439014281614e+1},
    {0, 5, 1.4930917708487785948e+1},
    {0.5, 1, 3.1415926535897932385},
    {0.5, 2, 6.2831853071795864769},
    {0.5, 3, 9.4247779607693797154},
    {0.5, 4, 1.2566370614359172954e+1},
    {0.5, 5, 1.5707963267948966192e+1},
    {1, 1, 3.8317059702075123156},
    {1, 2, 7.0155866698156187535},
    {1, 3, 1.0173468135062722077e+1},
    {1, 4, 1.3323691936314223032e+1},
    {1, 5, 1.6470630050877632813e+1},
    {2, 1, 5.1356223018406825563},
    {2, 2, 8.4172441403998648578},
    {2, 3, 1.1619841172149059427e+1},
    {2, 4, 1.4795951782351260747e+1},
    {2, 5, 1.7959819494987826455e+1},
    {3, 1, 6.3801618959239835062},
    {3, 2, 9.7610231299816696785},
    {3, 3, 1.301520072169843442e+1},
    {3, 4, 1.6223466160318768122e+1},
    {3, 5, 1.9409415226435011554e+1},
};

}  // namespace reference
