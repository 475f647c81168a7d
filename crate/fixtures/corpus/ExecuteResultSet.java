import java.sql.*;

class ExecuteResultSet {
    void run(Connection c) throws SQLException {
        Statement st = c.createStatement();
        st.execute("SELECT id, note FROM orders");
        ResultSet rs = st.getResultSet();
        while (rs.next()) {
            String note = rs.getString(2);
        }
    }
}
