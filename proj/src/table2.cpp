#include "rotorkit/table2.hpp"

namespace rotorkit {

const std::string& table2_csv() {
    static const std::string text = R"CSV(date,SSE,STAR50,GEM,SZI,aggregate
2023/1/3,505534.1655,27654.2025,58531.8780,222484.4611,814204.7071
2023/1/4,507178.5504,27460.6738,58095.4355,222255.3862,814990.0459
2023/1/5,527759.7458,27711.7211,59681.8849,226938.1169,842091.4687
2023/1/6,527989.9217,27958.1995,60185.5268,227722.4531,843856.1011
2023/1/7,527990.4556,27958.1995,60185.5873,227722.5137,843856.7561
2023/1/8,527990.4556,27958.1995,60185.5873,227722.5137,843856.7561
2023/1/9,530856.1915,27917.1028,60634.3491,229361.4531,848769.0965
2023/1/10,529511.2570,28002.4359,61533.8175,230442.7724,849490.2828
2023/1/11,529096.6697,27514.3085,60844.5626,229155.7859,846611.3267
2023/1/12,530062.6162,27464.8568,61125.4770,229593.7811,848246.7311
2023/1/13,535348.8555,27526.9618,62081.0999,232531.2020,857488.1192
2023/1/14,535538.9456,27526.9618,62081.0999,232531.2020,857678.2093
2023/1/15,535538.9456,27526.9618,62081.0999,232531.2020,857678.2093
2023/1/16,540230.0316,28075.5461,63211.9981,236058.5608,867576.1366
2023/1/17,539548.1742,28306.8792,63339.0055,236075.4340,867269.4929
2023/1/18,540087.0922,28329.0064,63296.5045,236258.1357,867970.7388
2023/1/19,542634.3896,28802.6250,63904.2903,238115.1914,873456.4963
2023/1/20,547362.1832,28923.3514,64173.5386,239441.1324,879900.2056
2023/1/21,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/22,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/23,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/24,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/25,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/26,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/27,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/28,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/29,547407.2668,28923.3514,64173.5386,239441.1324,879945.2892
2023/1/30,549067.6655,28916.5365,64880.2731,241756.6716,884621.1467
2023/1/31,546848.5938,28475.1451,63994.0950,239920.5883,879238.4222
2023/2/1,551731.2942,28900.5088,64750.5598,243093.5091,888475.8719
2023/2/2,551692.5523,29038.4581,64545.3856,242639.3470,887915.743
2023/2/3,548332.2655,29113.5905,63962.1251,240909.3928,882317.3739
2023/2/4,548333.5782,29113.5905,63962.1251,240909.3928,882318.6866
2023/2/5,548333.5782,29113.5905,63962.1251,240909.3928,882318.6866
2023/2/6,544319.8107,28888.6082,63067.6458,237963.9074,874239.9721
2023/2/7,545584.9276,28744.9458,62966.6320,238294.8477,875591.3531
2023/2/8,542975.5228,28430.7270,62692.7744,237029.9015,871128.9257
2023/2/9,549304.5951,29178.7882,63743.1066,240629.8503,882856.3402
2023/2/10,547850.2857,28907.0768,63224.4264,239317.7142,879299.5031
2023/2/11,547862.8847,28907.0768,63224.4264,239317.6566,879312.0445
2023/2/12,547862.8847,28907.0768,63224.4264,239317.6566,879312.0445
2023/2/13,551379.9523,28935.7801,64079.2242,242265.8246,886660.7812
2023/2/14,552774.9415,28899.2973,63872.7550,241991.7806,887538.7744
2023/2/15,550697.7607,28986.8070,63444.7939,241154.2358,884283.5974
2023/2/16,546443.4951,28417.6981,62590.5625,238068.1308,875519.8865
2023/2/17,542158.3425,27874.1899,61117.9777,234560.8168,865711.3269
2023/2/18,542167.8120,27874.3067,61117.9777,234560.8168,865720.9132
2023/2/19,542167.8120,27874.3067,61117.9777,234560.8168,865720.9132
2023/2/20,554055.7776,28194.7864,61913.5983,239280.1588,883444.3211
2023/2/21,556532.1567,28109.5119,61556.0715,239559.7594,885757.4995
2023/2/22,553698.8671,27952.0385,61169.3187,238270.6028,881090.8271
2023/2/23,553090.1817,28027.8329,61240.0042,237950.0666,880308.0854
2023/2/24,549676.8429,27988.2011,60537.0967,235911.4983,874113.639
2023/2/25,549676.8725,27988.2011,60538.4021,235912.7832,874116.2589
2023/2/26,549676.8725,27988.2011,60538.4021,235912.7832,874116.2589
2023/2/27,548266.0880,27860.5341,60045.0598,234305.5918,870477.2737
2023/2/28,552400.6764,27986.9847,60532.4052,235896.2262,876816.2925
2023/3/1,558819.5369,28078.7431,60929.1676,238416.2977,886243.7453
2023/3/2,558872.9335,27844.1993,60263.4996,237120.8556,884101.488
2023/3/3,562728.0570,28117.8476,60333.4158,237229.5588,888408.8792
2023/3/4,562728.7896,28117.8476,60333.4158,237229.5588,888409.6118
2023/3/5,562728.7896,28117.8476,60333.4158,237229.5588,888409.6118
2023/3/6,561996.8939,28430.3054,60546.1823,236996.0303,887969.4119
2023/3/7,556248.2684,27867.2581,59361.8442,232507.4331,875984.8038
2023/3/8,556176.3190,28000.3343,59212.4367,232155.5869,875544.6769
2023/3/9,555400.1035,28102.8761,59059.6536,231711.3172,874273.9504
2023/3/10,547525.0061,27963.9771,59025.3633,228844.9081,863359.2546
2023/3/11,547557.9306,27963.9771,59025.3633,228845.1164,863392.3874
2023/3/12,547557.9306,27963.9771,59025.3633,228845.1164,863392.3874
2023/3/13,555917.7978,29120.9346,58698.0251,230022.9782,873759.7357
2023/3/14,552510.3167,29632.2548,58295.7680,228253.6562,868691.9957
2023/3/15,556150.7174,29499.4495,58143.5074,228368.6029,872162.2772
2023/3/16,550778.8970,29032.7359,57398.0498,225052.8410,862262.5237
2023/3/17,555221.1613,29689.8138,57197.5817,225463.9554,867572.5122
2023/3/18,555379.1268,29689.8138,57197.6126,225463.3901,867729.9433
2023/3/19,555379.1268,29689.8138,57197.6126,225463.3901,867729.9433
2023/3/20,551076.9757,29864.6686,57138.1325,224696.5454,862776.3222
2023/3/21,553837.3904,30132.9332,58301.7212,228162.6603,870434.7051
2023/3/22,555904.5556,30229.5750,58455.2244,229409.1271,873998.4821
2023/3/23,559694.5786,30734.2492,58955.1250,231428.1439,880812.0967
2023/3/24,555373.0524,30690.6168,59096.4869,231812.8341,876972.9902
2023/3/25,555376.5946,30690.6168,59096.4869,231812.8341,876976.5324
2023/3/26,555376.5946,30690.6168,59096.4869,231812.8341,876976.5324
2023/3/27,552275.1039,30548.5778,59724.7845,231878.6480,874427.1142
2023/3/28,551590.8622,30082.5775,59065.6142,230698.4491,871437.503
2023/3/29,550707.2594,30742.3705,59104.4677,230997.4573,871551.5549
2023/3/30,554001.2640,30815.3631,59434.4513,232533.8104,876784.8888
2023/3/31,556659.4282,31168.9071,59806.6558,233846.1386,881481.1297
2023/4/1,556660.4798,31169.6685,59806.6558,233846.1054,881482.9095
2023/4/2,556660.3712,31169.6685,59806.6558,233846.1054,881482.8009
2023/4/3,561172.1159,32453.0414,60556.1012,236355.7747,890537.0332
2023/4/4,565356.4233,32558.4258,60071.9418,235916.8701,893903.661
2023/4/5,565369.6658,32558.4258,60071.9419,235916.8817,893916.9152
2023/4/6,565900.0463,33018.5746,60135.9509,235876.4018,894930.9736
2023/4/7,568474.9299,33395.9586,60667.2947,237774.6505,900312.8337
)CSV";
    return text;
}

PanelSchema table2_schema() {
    PanelSchema schema;
    schema.date_column = "date";
    schema.value_columns = {"SSE", "STAR50", "GEM", "SZI"};
    schema.aggregate_column = "aggregate";
    return schema;
}

Panel load_table2() { return parse_panel(table2_csv(), table2_schema()); }

}  // namespace rotorkit
