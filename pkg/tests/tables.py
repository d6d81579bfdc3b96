"""Golden counting tables for n = 1..20 (index 0 is n = 1)."""

GRAPHS_ALL = [
    1,
    2,
    8,
    61,
    821,
    17962,
    589912,
    26990539,
    1611421595,
    119106036226,
    10475032926304,
    1064759262580675,
    122455558249650523,
    15683814373288014514,
    2210104382919809469776,
    339419270505312015418873,
    56377137858208036652271961,
    10064213826097447392585326650,
    1920763688236792486611031950040,
    390147921384971528200998632189581,
]

GRAPHS_CONNECTED = [
    1,
    1,
    4,
    35,
    540,
    13116,
    462868,
    22189056,
    1364476032,
    102768330140,
    9150009283316,
    937871756182824,
    108501459033647056,
    13957140054455406368,
    1973316500054545453200,
    303844760227083629476736,
    50574398535605806604877952,
    9043978529936559892024953936,
    1728560464917767130397726200016,
    351542184165686400289151814740320,
]

GRAPHS_TWO_CONNECTED = [
    0,
    1,
    1,
    7,
    110,
    2880,
    108486,
    5376448,
    330554736,
    24223100940,
    2056900853260,
    198279609266376,
    21365210239261824,
    2542622031178234096,
    331005569819483825280,
    46769563108388612386560,
    7125735843407702680130176,
    1164214191212133452455716432,
    203006967721530831955744610256,
    37624686779731200180043318035040,
]

MAPS_ALL = [
    1,
    2,
    6,
    22,
    92,
    419,
    2025,
    10214,
    53192,
    283921,
    1545326,
    8544766,
    47867107,
    271091848,
    1549624321,
    8929009486,
    51807558686,
    302430309885,
    1774979731304,
    10467456794046,
]

MAPS_TWO_CONNECTED = [
    1,
    0,
    1,
    0,
    5,
    1,
    35,
    16,
    288,
    210,
    2607,
    2612,
    25155,
    31885,
    254255,
    386672,
    2663101,
    4682253,
    28696460,
    56747900,
]
