"""Convergence tables as published: (value, correct digits) at n = 10, 25, 50, 75, 100."""

TERM_COUNTS = (10, 25, 50, 75, 100)

PUBLISHED = {
    ("castellanos-squared", 0): (
        ("3.1415926540096031579541983575759", 8),
        ("3.1415926535897931755199500028705", 15),
        ("3.1415926535897931755212222064311", 15),
        ("3.1415926535897931755212222064311", 15),
        ("3.1415926535897931755212222064311", 15),
    ),
    ("lucbal", 0): (
        ("3.1681253658683134338813758290598", 1),
        ("3.1394749981715568271090077701047", 1),
        ("3.1416593510252682593586123771523", 3),
        ("3.1415898900113144709178285437189", 4),
        ("3.1415927819755543664446705866538", 6),
    ),
    ("theorem2", 0): (
        ("3.1415926540617729889571081190938", 8),
        ("3.1415926535897935109299308733563", 15),
        ("3.1415926535897935109305996238453", 15),
        ("3.1415926535897935109305996238453", 15),
        ("3.1415926535897935109305996238453", 15),
    ),
    ("theorem2", 1): (
        ("3.1421196570445914842979046044391", 2),
        ("3.1415924425521257791274315531176", 6),
        ("3.1415926535907651359119064125043", 10),
        ("3.1415926535897932445405743444239", 16),
        ("3.1415926535897932504225822917772", 16),
    ),
    ("theorem3-pi6", 0): (
        ("3.14159265358982738004655360471", 12),
        ("3.141592653589793111803909553252", 15),
        ("3.1415926535897931118039095532521", 15),
        ("3.1415926535897931118039095532521", 15),
        ("3.1415926535897931118039095532521", 15),
    ),
    ("theorem3-pi6", 1): (
        ("3.1415926671660013427841119922951", 7),
        ("3.1415926535897930747899824982812", 15),
        ("3.1415926535897930771752670402775", 15),
        ("3.1415926535897930771752670402775", 15),
        ("3.1415926535897930771752670402775", 15),
    ),
    ("theorem3-pi12", 0): (
        ("3.1415926535897947339924377936013", 14),
        ("3.1415926535897947339867034604622", 14),
        ("3.1415926535897947339867034604622", 14),
        ("3.1415926535897947339867034604622", 14),
        ("3.1415926535897947339867034604622", 14),
    ),
    ("theorem3-pi12", 1): (
        ("3.1415926535897956856265976351507", 14),
        ("3.1415926535897944192246093796406", 14),
        ("3.1415926535897944192246093796406", 14),
        ("3.1415926535897944192246093796406", 14),
        ("3.1415926535897944192246093796406", 14),
    ),
    ("theorem3-pi5", 0): (
        ("3.1415926535921310968341963746407", 10),
        ("3.141592653589792871679833893134", 14),
        ("3.1415926535897928716798338954132", 14),
        ("3.1415926535897928716798338954132", 14),
        ("3.1415926535897928716798338954132", 14),
    ),
    ("theorem3-pi5", 1): (
        ("3.1415939762233089574900159429531", 5),
        ("3.1415926535896632627309996371646", 12),
        ("3.1415926535897928493289793465367", 14),
        ("3.1415926535897928493289787796672", 14),
        ("3.1415926535897928493289787796672", 14),
    ),
    ("theorem4-pi12", 0): (
        ("3.1415926535897945091605064246388", 14),
        ("3.1415926535897944941490876249881", 14),
        ("3.1415926535897944941490876249881", 14),
        ("3.1415926535897944941490876249881", 14),
        ("3.1415926535897944941490876249881", 14),
    ),
    ("theorem4-pi12", 1): (
        ("3.1415926535898033991093222132522", 12),
        ("3.1415926535897942690609285922555", 14),
        ("3.1415926535897942690609285922555", 14),
        ("3.1415926535897942690609285922555", 14),
        ("3.1415926535897942690609285922555", 14),
    ),
    ("theorem4-pi6", 0): (
        ("3.1415926536976031512950065859936", 9),
        ("3.1415926535897929748407090095711", 14),
        ("3.141592653589792974840740857073", 14),
        ("3.141592653589792974840740857073", 14),
        ("3.141592653589792974840740857073", 14),
    ),
    ("theorem4-pi6", 1): (
        ("3.1415927863118601169382604268352", 6),
        ("3.1415926535897928788785708458934", 14),
        ("3.1415926535897933582722721433178", 15),
        ("3.1415926535897933582722721433093", 15),
        ("3.1415926535897933582722721433093", 15),
    ),
    ("theorem4-pi5", 0): (
        ("3.1415926617777441429048832649656", 7),
        ("3.1415926535897927600555556635439", 14),
        ("3.1415926535897927609931468741211", 14),
        ("3.1415926535897927609931468741211", 14),
        ("3.1415926535897927609931468741211", 14),
    ),
    ("theorem4-pi5", 1): (
        ("3.1416085221242421932891054056989", 3),
        ("3.1415926535469317102875642213194", 10),
        ("3.1415926535897929816708906429346", 14),
        ("3.1415926535897929816235883662303", 14),
        ("3.1415926535897929816235883662988", 14),
    ),
    ("castellanos1", 0): (
        ("3.1415946628008058070270975343262", 5),
        ("3.1415926535893304765153112605509", 12),
        ("3.1415926535897932529555146219012", 16),
        ("3.1415926535897932529555062020827", 16),
        ("3.1415926535897932529555062020827", 16),
    ),
    ("castellanos1", 1): (
        ("3.1513648928833562151579600460063", 1),
        ("3.1413911371820930200840194675568", 3),
        ("3.1415933178255789377527632793825", 5),
        ("3.1415926507102507935365145416425", 8),
        ("3.1415926536037885968968215682418", 9),
    ),
    ("lucbal-squared", 0): (
        ("3.1500288764501782022564579932578", 1),
        ("3.1414500748004593281290444672926", 3),
        ("3.1415929908436770508682631082098", 6),
        ("3.1415926525406591485619208477698", 8),
        ("3.1415926535934520603658154364136", 10),
    ),
    ("lucas-squared", 0): (
        ("3.141592653589793277636375358286", 16),
        ("3.1415926535897932279669723561782", 16),
        ("3.1415926535897932279669723561782", 16),
        ("3.1415926535897932279669723561782", 16),
        ("3.1415926535897932279669723561782", 16),
    ),
    ("lucas-squared", 1): (
        ("3.1416003226810113749580541993994", 3),
        ("3.1415926535792334445640011923928", 10),
        ("3.1415926535897932072655992250783", 16),
        ("3.1415926535897932072618102929481", 16),
        ("3.1415926535897932072618102929499", 16),
    ),
}
