import java.sql.*;

class StockLevel {
    String distInfo(Connection con, JSONObject obj, int _li_no, int _o_ol_cnt, int _li_id, int _li_s_w_id)
            throws SQLException {
        PreparedStatement statement = null;
        ResultSet rs = null;
        String _s_dist = null;

        int _d_id = Integer.parseInt((String) obj.get("did"));

        while (_li_no < _o_ol_cnt) {
            statement = con.prepareStatement(
                "select * from stock " +
                "where s_i_id = ? and s_w_id = ?");
            statement.setInt(1, _li_id);
            statement.setInt(2, _li_s_w_id);

            rs = statement.executeQuery();
            rs.next();

            if (_d_id == 1) {
                _s_dist = rs.getString("s_dist_01"); // CHAR(24)
            } else if (_d_id == 2) {
                _s_dist = rs.getString("s_dist_02"); // CHAR(24)
            }
            _li_no++;
        }
        return _s_dist;
    }
}
